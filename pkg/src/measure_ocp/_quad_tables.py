"""Symmetric triangle quadrature tables, degrees 1 to 19.

Generated from the Xiao-Gimbutas rules distributed with modepy 2026.1
(``modepy/quadrature/xg_quad_data.py``, MIT license), mapped from the
equilateral triangle to the reference triangle (0,0), (1,0), (0,1).
Each entry is ``(barycentric, weights)``; weights sum to 1/2.

H. Xiao and Z. Gimbutas, Comput. Math. Appl. 59 (2010) 663-676.
"""

TABLES = {
    1: (
        [
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
        ],
        [
            0.5000000000000009,
        ],
    ),
    2: (
        [
            (0.6666666666666666, 0.16666666666666674, 0.16666666666666663),
            (0.16666666666666663, 0.6666666666666667, 0.16666666666666663),
            (0.16666666666666652, 0.16666666666666663, 0.6666666666666669),
        ],
        [
            0.16666666666666674,
            0.16666666666666674,
            0.16666666666666674,
        ],
    ),
    3: (
        [
            (0.44594849091596495, 0.44594849091596495, 0.10810301816807005),
            (0.10810301816807011, 0.44594849091596517, 0.44594849091596467),
            (0.44594849091596483, 0.10810301816806989, 0.4459484909159653),
            (0.8168475729804583, 0.0915762135097713, 0.09157621350977041),
            (0.09157621350977052, 0.8168475729804585, 0.09157621350977097),
            (0.09157621350977063, 0.09157621350977063, 0.8168475729804587),
        ],
        [
            0.11169079483900564,
            0.11169079483900564,
            0.11169079483900564,
            0.05497587182766082,
            0.05497587182766082,
            0.05497587182766082,
        ],
    ),
    4: (
        [
            (0.44594849091596495, 0.44594849091596495, 0.10810301816807005),
            (0.10810301816807011, 0.44594849091596517, 0.44594849091596467),
            (0.44594849091596483, 0.10810301816806989, 0.4459484909159653),
            (0.8168475729804583, 0.0915762135097713, 0.09157621350977041),
            (0.09157621350977052, 0.8168475729804585, 0.09157621350977097),
            (0.09157621350977063, 0.09157621350977063, 0.8168475729804587),
        ],
        [
            0.11169079483900564,
            0.11169079483900564,
            0.11169079483900564,
            0.05497587182766082,
            0.05497587182766082,
            0.05497587182766082,
        ],
    ),
    5: (
        [
            (0.7974269853530875, 0.10128650732345656, 0.1012865073234559),
            (0.10128650732345623, 0.7974269853530873, 0.10128650732345645),
            (0.10128650732345623, 0.10128650732345607, 0.7974269853530876),
            (0.47014206410511494, 0.470142064105115, 0.05971587178977),
            (0.05971587178976989, 0.47014206410511483, 0.4701420641051153),
            (0.47014206410511483, 0.05971587178976989, 0.4701420641051153),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
        ],
        [
            0.06296959027241374,
            0.06296959027241374,
            0.06296959027241374,
            0.06619707639425325,
            0.06619707639425325,
            0.06619707639425325,
            0.11250000000000018,
        ],
    ),
    6: (
        [
            (0.5611400349004341, 0.2194299825497832, 0.2194299825497827),
            (0.2194299825497829, 0.5611400349004338, 0.21942998254978324),
            (0.21942998254978296, 0.21942998254978296, 0.5611400349004341),
            (0.4801379641122151, 0.4801379641122151, 0.0397240717755698),
            (0.039724071775569914, 0.480137964112215, 0.4801379641122151),
            (0.480137964112215, 0.039724071775569914, 0.4801379641122151),
            (0.8390092597147912, 0.14161901592396814, 0.019371724361240683),
            (0.019371724361240794, 0.839009259714791, 0.1416190159239682),
            (0.14161901592396753, 0.019371724361240683, 0.8390092597147918),
            (0.14161901592396808, 0.8390092597147912, 0.019371724361240683),
            (0.019371724361240017, 0.1416190159239682, 0.8390092597147918),
            (0.8390092597147909, 0.019371724361240905, 0.1416190159239682),
        ],
        [
            0.08566656207649066,
            0.08566656207649066,
            0.08566656207649066,
            0.040365544796515586,
            0.040365544796515586,
            0.040365544796515586,
            0.02031727989683034,
            0.02031727989683034,
            0.02031727989683034,
            0.02031727989683034,
            0.02031727989683034,
            0.02031727989683034,
        ],
    ),
    7: (
        [
            (0.4731956536892511, 0.4731956536892512, 0.0536086926214977),
            (0.05360869262149803, 0.4731956536892511, 0.4731956536892509),
            (0.4731956536892507, 0.05360869262149781, 0.4731956536892515),
            (0.8844047198909869, 0.05779764005450694, 0.05779764005450616),
            (0.05779764005450616, 0.8844047198909871, 0.057797640054506716),
            (0.05779764005450616, 0.05779764005450616, 0.8844047198909877),
            (0.6936897820041288, 0.2593390118657858, 0.04697120613008543),
            (0.04697120613008565, 0.6936897820041287, 0.2593390118657857),
            (0.25933901186578556, 0.04697120613008554, 0.6936897820041289),
            (0.2593390118657858, 0.6936897820041288, 0.04697120613008543),
            (0.04697120613008554, 0.25933901186578556, 0.6936897820041289),
            (0.6936897820041287, 0.04697120613008565, 0.2593390118657857),
            (0.5166727872055052, 0.24166360639724727, 0.2416636063972475),
            (0.24166360639724727, 0.5166727872055052, 0.2416636063972475),
            (0.24166360639724715, 0.24166360639724715, 0.5166727872055057),
        ],
        [
            0.026590416648380237,
            0.026590416648380237,
            0.026590416648380237,
            0.02045908519702843,
            0.02045908519702843,
            0.02045908519702843,
            0.027877270270345544,
            0.027877270270345544,
            0.027877270270345544,
            0.027877270270345544,
            0.027877270270345544,
            0.027877270270345544,
            0.0638626242805668,
            0.0638626242805668,
            0.0638626242805668,
        ],
    ),
    8: (
        [
            (0.6588613844964794, 0.17056930775176038, 0.17056930775176027),
            (0.17056930775176038, 0.6588613844964794, 0.17056930775176027),
            (0.17056930775175994, 0.17056930775175994, 0.6588613844964801),
            (0.459292588292723, 0.459292588292723, 0.08141482341455397),
            (0.08141482341455397, 0.459292588292723, 0.459292588292723),
            (0.4592925882927226, 0.08141482341455375, 0.4592925882927236),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.8989055433659381, 0.05054722831703107, 0.050547228317030846),
            (0.05054722831703107, 0.8989055433659381, 0.050547228317030846),
            (0.050547228317030846, 0.050547228317030846, 0.8989055433659383),
            (0.7284923929554042, 0.26311282963463833, 0.008394777409957421),
            (0.00839477740995731, 0.7284923929554044, 0.26311282963463833),
            (0.26311282963463756, 0.008394777409957532, 0.7284923929554049),
            (0.2631128296346382, 0.7284923929554044, 0.008394777409957421),
            (0.00839477740995731, 0.2631128296346384, 0.7284923929554044),
            (0.7284923929554044, 0.00839477740995731, 0.26311282963463833),
        ],
        [
            0.05160868526735919,
            0.05160868526735919,
            0.05160868526735919,
            0.04754581713364242,
            0.04754581713364242,
            0.04754581713364242,
            0.07215780383889372,
            0.016229248811599036,
            0.016229248811599036,
            0.016229248811599036,
            0.013615157087217505,
            0.013615157087217505,
            0.013615157087217505,
            0.013615157087217505,
            0.013615157087217505,
            0.013615157087217505,
        ],
    ),
    9: (
        [
            (0.4896825191987376, 0.4896825191987377, 0.02063496160252465),
            (0.020634961602524593, 0.48968251919873773, 0.4896825191987377),
            (0.48968251919873734, 0.020634961602524426, 0.48968251919873823),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6235929287619346, 0.18820353561903258, 0.1882035356190328),
            (0.18820353561903258, 0.6235929287619346, 0.1882035356190328),
            (0.18820353561903247, 0.18820353561903258, 0.623592928761935),
            (0.7411985987844979, 0.22196298916076596, 0.03683841205473615),
            (0.036838412054736314, 0.7411985987844982, 0.22196298916076546),
            (0.2219629891607653, 0.03683841205473626, 0.7411985987844985),
            (0.22196298916076584, 0.741198598784498, 0.03683841205473615),
            (0.036838412054735814, 0.2219629891607658, 0.7411985987844985),
            (0.741198598784498, 0.036838412054736036, 0.221962989160766),
            (0.4370895914929368, 0.43708959149293675, 0.1258208170141265),
            (0.1258208170141265, 0.43708959149293664, 0.4370895914929368),
            (0.4370895914929366, 0.12582081701412662, 0.4370895914929368),
            (0.9105409732110946, 0.044729513394452636, 0.04472951339445275),
            (0.044729513394452525, 0.9105409732110947, 0.04472951339445275),
            (0.044729513394452414, 0.044729513394452414, 0.9105409732110952),
        ],
        [
            0.015667350113569536,
            0.015667350113569536,
            0.015667350113569536,
            0.04856789814139952,
            0.03982386946360524,
            0.03982386946360524,
            0.03982386946360524,
            0.021641769688644702,
            0.021641769688644702,
            0.021641769688644702,
            0.021641769688644702,
            0.021641769688644702,
            0.021641769688644702,
            0.038913770502387084,
            0.038913770502387084,
            0.038913770502387084,
            0.012788837829349035,
            0.012788837829349035,
            0.012788837829349035,
        ],
    ),
    10: (
        [
            (0.49517345980117045, 0.49517345980117045, 0.009653080397659108),
            (0.009653080397659108, 0.4951734598011701, 0.4951734598011708),
            (0.4951734598011701, 0.009653080397659108, 0.4951734598011708),
            (0.9617211695143175, 0.019139415242841573, 0.019139415242840907),
            (0.01913941524284113, 0.9617211695143173, 0.019139415242841573),
            (0.019139415242842017, 0.019139415242842128, 0.9617211695143159),
            (0.8315416244168032, 0.13373475510086918, 0.03472362048232758),
            (0.034723620482327355, 0.8315416244168033, 0.1337347551008693),
            (0.13373475510086885, 0.034723620482327466, 0.8315416244168037),
            (0.13373475510086918, 0.8315416244168032, 0.03472362048232758),
            (0.03472362048232713, 0.13373475510086918, 0.8315416244168037),
            (0.8315416244168033, 0.034723620482327355, 0.1337347551008693),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6357241363774713, 0.3266931362813373, 0.0375827273411915),
            (0.0375827273411915, 0.6357241363774715, 0.326693136281337),
            (0.32669313628133667, 0.037582727341191724, 0.6357241363774716),
            (0.3266931362813372, 0.6357241363774713, 0.0375827273411915),
            (0.037582727341191724, 0.32669313628133667, 0.6357241363774716),
            (0.6357241363774714, 0.03758272734119139, 0.3266931362813372),
            (0.6310299746295067, 0.18448501268524675, 0.18448501268524647),
            (0.1844850126852467, 0.6310299746295068, 0.18448501268524647),
            (0.18448501268524653, 0.18448501268524647, 0.631029974629507),
            (0.4282348209437188, 0.4282348209437189, 0.14353035811256232),
            (0.14353035811256204, 0.4282348209437191, 0.42823482094371884),
            (0.42823482094371906, 0.1435303581125621, 0.42823482094371884),
        ],
        [
            0.004896295249209142,
            0.004896295249209142,
            0.004896295249209142,
            0.0031926796150593276,
            0.0031926796150593276,
            0.0031926796150593276,
            0.014481140731628182,
            0.014481140731628182,
            0.014481140731628182,
            0.014481140731628182,
            0.014481140731628182,
            0.014481140731628182,
            0.04180743718698704,
            0.01936952454300945,
            0.01936952454300945,
            0.01936952454300945,
            0.01936952454300945,
            0.01936952454300945,
            0.01936952454300945,
            0.03931688487318867,
            0.03931688487318867,
            0.03931688487318867,
            0.03762366398427206,
            0.03762366398427206,
            0.03762366398427206,
        ],
    ),
    11: (
        [
            (0.9383062087288241, 0.030846895635588067, 0.030846895635587845),
            (0.030846895635587734, 0.9383062087288239, 0.0308468956355884),
            (0.030846895635586624, 0.030846895635586624, 0.9383062087288268),
            (0.4987801651784606, 0.4987801651784607, 0.0024396696430787346),
            (0.0024396696430781795, 0.4987801651784612, 0.4987801651784607),
            (0.49878016517846036, 0.0024396696430784015, 0.49878016517846124),
            (0.8263297175927506, 0.15930361983769364, 0.014366662569555766),
            (0.01436666256955571, 0.8263297175927506, 0.15930361983769364),
            (0.15930361983769337, 0.014366662569555433, 0.8263297175927512),
            (0.1593036198376937, 0.8263297175927505, 0.014366662569555766),
            (0.014366662569555433, 0.15930361983769342, 0.8263297175927512),
            (0.8263297175927506, 0.014366662569555655, 0.15930361983769364),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.7735843454266121, 0.11320782728669421, 0.11320782728669365),
            (0.11320782728669387, 0.7735843454266119, 0.11320782728669421),
            (0.11320782728669398, 0.11320782728669382, 0.7735843454266121),
            (0.43665501639317594, 0.43665501639317594, 0.1266899672136481),
            (0.126689967213648, 0.43665501639317605, 0.43665501639317594),
            (0.43665501639317567, 0.12668996721364778, 0.43665501639317655),
            (0.5710330827614615, 0.21448345861926954, 0.21448345861926899),
            (0.21448345861926915, 0.5710330827614613, 0.2144834586192696),
            (0.2144834586192692, 0.21448345861926932, 0.5710330827614615),
            (0.6417047167143861, 0.31063121631346313, 0.047664066972150754),
            (0.047664066972150865, 0.641704716714386, 0.31063121631346313),
            (0.3106312163134627, 0.047664066972150754, 0.6417047167143866),
            (0.31063121631346313, 0.6417047167143861, 0.047664066972150754),
            (0.04766406697215064, 0.31063121631346274, 0.6417047167143866),
            (0.6417047167143858, 0.047664066972150754, 0.31063121631346347),
        ],
        [
            0.006124648475353978,
            0.006124648475353978,
            0.006124648475353978,
            0.006232745936940684,
            0.006232745936940684,
            0.006232745936940684,
            0.007278811668904613,
            0.007278811668904613,
            0.007278811668904613,
            0.007278811668904613,
            0.007278811668904613,
            0.007278811668904613,
            0.04072256735467568,
            0.020064621190654164,
            0.020064621190654164,
            0.020064621190654164,
            0.03154743607994946,
            0.03154743607994946,
            0.03154743607994946,
            0.03392255387184767,
            0.03392255387184767,
            0.03392255387184767,
            0.02032142432794326,
            0.02032142432794326,
            0.02032142432794326,
            0.02032142432794326,
            0.02032142432794326,
            0.02032142432794326,
        ],
    ),
    12: (
        [
            (0.457074985970148, 0.27146250701492597, 0.2714625070149261),
            (0.27146250701492597, 0.45707498597014795, 0.2714625070149261),
            (0.271462507014926, 0.2714625070149261, 0.45707498597014784),
            (0.7814843446812915, 0.10925782765935438, 0.10925782765935421),
            (0.10925782765935443, 0.7814843446812914, 0.10925782765935421),
            (0.10925782765935421, 0.10925782765935421, 0.7814843446812916),
            (0.4401116486585931, 0.4401116486585932, 0.11977670268281371),
            (0.11977670268281376, 0.44011164865859276, 0.4401116486585935),
            (0.4401116486585927, 0.11977670268281382, 0.4401116486585935),
            (0.6282497516835561, 0.25545422863851724, 0.11629601967792658),
            (0.1162960196779263, 0.6282497516835562, 0.25545422863851747),
            (0.2554542286385172, 0.11629601967792624, 0.6282497516835566),
            (0.2554542286385172, 0.6282497516835562, 0.11629601967792658),
            (0.11629601967792624, 0.2554542286385172, 0.6282497516835566),
            (0.6282497516835561, 0.1162960196779263, 0.25545422863851747),
            (0.8513377925102402, 0.12727971723358927, 0.02138249025617045),
            (0.021382490256170783, 0.8513377925102399, 0.12727971723358933),
            (0.12727971723358888, 0.021382490256170894, 0.8513377925102402),
            (0.12727971723358922, 0.8513377925102403, 0.02138249025617045),
            (0.02138249025617034, 0.12727971723358944, 0.8513377925102402),
            (0.8513377925102403, 0.02138249025617034, 0.12727971723358933),
            (0.685310163906392, 0.2916556797383411, 0.023034156355266844),
            (0.023034156355266955, 0.6853101639063921, 0.29165567973834094),
            (0.29165567973834094, 0.023034156355267066, 0.685310163906392),
            (0.29165567973834106, 0.6853101639063921, 0.023034156355266844),
            (0.023034156355267066, 0.291655679738341, 0.685310163906392),
            (0.6853101639063919, 0.023034156355266844, 0.2916556797383413),
            (0.48820375094554147, 0.4882037509455416, 0.02359249810891695),
            (0.02359249810891656, 0.4882037509455416, 0.48820375094554186),
            (0.4882037509455415, 0.023592498108916615, 0.48820375094554186),
            (0.9507072731273287, 0.02464636343633586, 0.024646363436335417),
            (0.02464636343633575, 0.9507072731273288, 0.024646363436335417),
            (0.024646363436335306, 0.024646363436335417, 0.9507072731273293),
        ],
        [
            0.03127060659795147,
            0.03127060659795147,
            0.03127060659795147,
            0.014243026034438763,
            0.014243026034438763,
            0.014243026034438763,
            0.024959167464030457,
            0.024959167464030457,
            0.024959167464030457,
            0.0216136818297071,
            0.0216136818297071,
            0.0216136818297071,
            0.0216136818297071,
            0.0216136818297071,
            0.0216136818297071,
            0.007541838788255719,
            0.007541838788255719,
            0.007541838788255719,
            0.007541838788255719,
            0.007541838788255719,
            0.007541838788255719,
            0.01089179251930377,
            0.01089179251930377,
            0.01089179251930377,
            0.01089179251930377,
            0.01089179251930377,
            0.01089179251930377,
            0.012133419040726024,
            0.012133419040726024,
            0.012133419040726024,
            0.003965821254986826,
            0.003965821254986826,
            0.003965821254986826,
        ],
    ),
    13: (
        [
            (0.4961358947410459, 0.4961358947410461, 0.007728210517907952),
            (0.00772821051790773, 0.49613589474104586, 0.49613589474104636),
            (0.4961358947410458, 0.007728210517907841, 0.49613589474104636),
            (0.4696086896534918, 0.4696086896534919, 0.06078262069301632),
            (0.06078262069301604, 0.4696086896534921, 0.46960868965349184),
            (0.4696086896534918, 0.060782620693015765, 0.46960868965349245),
            (0.5377794301018355, 0.23111028494908253, 0.23111028494908198),
            (0.2311102849490822, 0.5377794301018353, 0.23111028494908253),
            (0.23111028494908226, 0.23111028494908226, 0.5377794301018355),
            (0.6889333070396046, 0.29207868857663666, 0.018988004383758694),
            (0.018988004383758805, 0.6889333070396048, 0.29207868857663644),
            (0.292078688576636, 0.01898800438375914, 0.6889333070396049),
            (0.29207868857663666, 0.6889333070396046, 0.018988004383758694),
            (0.018988004383758472, 0.2920786885766366, 0.6889333070396049),
            (0.6889333070396045, 0.018988004383758694, 0.29207868857663677),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6355187156236323, 0.26674525331035126, 0.09773603106601647),
            (0.0977360310660163, 0.6355187156236324, 0.2667452533103513),
            (0.2667452533103506, 0.09773603106601658, 0.6355187156236328),
            (0.26674525331035126, 0.6355187156236323, 0.09773603106601647),
            (0.09773603106601636, 0.2667452533103514, 0.6355187156236323),
            (0.6355187156236324, 0.09773603106601636, 0.2667452533103513),
            (0.4144775702790544, 0.4144775702790544, 0.17104485944189118),
            (0.17104485944189063, 0.41447757027905463, 0.41447757027905474),
            (0.41447757027905463, 0.17104485944189063, 0.41447757027905474),
            (0.7728801748557336, 0.1135599125721336, 0.11355991257213283),
            (0.11355991257213283, 0.7728801748557338, 0.11355991257213338),
            (0.11355991257213305, 0.1135599125721331, 0.7728801748557338),
            (0.8512338800096334, 0.12679977578383744, 0.021966344206529098),
            (0.02196634420652943, 0.8512338800096334, 0.12679977578383717),
            (0.12679977578383717, 0.021966344206529098, 0.8512338800096337),
            (0.1267997757838374, 0.8512338800096335, 0.021966344206529098),
            (0.021966344206529098, 0.12679977578383717, 0.8512338800096337),
            (0.8512338800096332, 0.021966344206529098, 0.12679977578383772),
            (0.9502081370175672, 0.024895931491216383, 0.024895931491216383),
            (0.024895931491216272, 0.9502081370175673, 0.024895931491216383),
            (0.024895931491216272, 0.024895931491216383, 0.9502081370175673),
        ],
        [
            0.004970738180536301,
            0.004970738180536301,
            0.004970738180536301,
            0.016390620801861475,
            0.016390620801861475,
            0.016390620801861475,
            0.023031204796389138,
            0.023031204796389138,
            0.023031204796389138,
            0.009062749323100434,
            0.009062749323100434,
            0.009062749323100434,
            0.009062749323100434,
            0.009062749323100434,
            0.009062749323100434,
            0.025811323332145406,
            0.01860598022863078,
            0.01860598022863078,
            0.01860598022863078,
            0.01860598022863078,
            0.01860598022863078,
            0.01860598022863078,
            0.023473547771077585,
            0.023473547771077585,
            0.023473547771077585,
            0.015451548987879902,
            0.015451548987879902,
            0.015451548987879902,
            0.0076965363418910766,
            0.0076965363418910766,
            0.0076965363418910766,
            0.0076965363418910766,
            0.0076965363418910766,
            0.0076965363418910766,
            0.004014699897629204,
            0.004014699897629204,
            0.004014699897629204,
        ],
    ),
    14: (
        [
            (0.4176447193404539, 0.4176447193404539, 0.16471056131909223),
            (0.1647105613190919, 0.4176447193404539, 0.4176447193404542),
            (0.4176447193404539, 0.1647105613190919, 0.4176447193404542),
            (0.6869801678080877, 0.2983728821362577, 0.01464695005565464),
            (0.014646950055654528, 0.6869801678080877, 0.2983728821362578),
            (0.29837288213625746, 0.014646950055654417, 0.6869801678080881),
            (0.2983728821362577, 0.6869801678080877, 0.01464695005565464),
            (0.014646950055654417, 0.29837288213625746, 0.6869801678080881),
            (0.6869801678080875, 0.014646950055654528, 0.298372882136258),
            (0.8764002338182548, 0.06179988309087281, 0.061799883090872365),
            (0.061799883090872476, 0.8764002338182546, 0.06179988309087292),
            (0.061799883090872365, 0.061799883090872365, 0.8764002338182553),
            (0.570222290846683, 0.33686145979634496, 0.09291624935697212),
            (0.09291624935697196, 0.570222290846683, 0.3368614597963451),
            (0.33686145979634485, 0.09291624935697196, 0.5702222908466832),
            (0.3368614597963449, 0.570222290846683, 0.09291624935697212),
            (0.09291624935697185, 0.33686145979634496, 0.5702222908466832),
            (0.5702222908466827, 0.0929162493569719, 0.33686145979634524),
            (0.45304494338232254, 0.2734775283088386, 0.2734775283088388),
            (0.2734775283088386, 0.4530449433823226, 0.2734775283088388),
            (0.2734775283088385, 0.27347752830883854, 0.453044943382323),
            (0.6455889351749132, 0.17720553241254333, 0.17720553241254344),
            (0.17720553241254322, 0.6455889351749133, 0.17720553241254344),
            (0.1772055324125431, 0.1772055324125431, 0.6455889351749138),
            (0.9612180775025981, 0.01939096124870121, 0.019390961248700656),
            (0.019390961248700878, 0.9612180775025979, 0.01939096124870121),
            (0.019390961248701655, 0.019390961248701766, 0.9612180775025966),
            (0.4889639103621787, 0.48896391036217873, 0.022072179275642534),
            (0.02207217927564259, 0.4889639103621787, 0.48896391036217873),
            (0.4889639103621786, 0.022072179275642645, 0.48896391036217873),
            (0.7706085547749966, 0.1722666878213555, 0.057124757403647974),
            (0.05712475740364764, 0.7706085547749967, 0.17226668782135568),
            (0.1722666878213549, 0.057124757403648085, 0.770608554774997),
            (0.17226668782135546, 0.7706085547749966, 0.057124757403647974),
            (0.05712475740364742, 0.17226668782135557, 0.770608554774997),
            (0.7706085547749967, 0.05712475740364764, 0.17226668782135568),
            (0.8797571713701708, 0.118974497696957, 0.0012683309328721526),
            (0.0012683309328720416, 0.8797571713701711, 0.1189744976969569),
            (0.11897449769695612, 0.0012683309328722636, 0.8797571713701716),
            (0.1189744976969569, 0.879757171370171, 0.0012683309328721526),
            (0.0012683309328717085, 0.11897449769695673, 0.8797571713701716),
            (0.8797571713701711, 0.0012683309328720416, 0.1189744976969569),
        ],
        [
            0.016394176772062685,
            0.016394176772062685,
            0.016394176772062685,
            0.007218154056766914,
            0.007218154056766914,
            0.007218154056766914,
            0.007218154056766914,
            0.007218154056766914,
            0.007218154056766914,
            0.007216849834888331,
            0.007216849834888331,
            0.007216849834888331,
            0.019285755393530366,
            0.019285755393530366,
            0.019285755393530366,
            0.019285755393530366,
            0.019285755393530366,
            0.019285755393530366,
            0.025887052253645813,
            0.025887052253645813,
            0.025887052253645813,
            0.02108129436849654,
            0.02108129436849654,
            0.02108129436849654,
            0.0024617018012000435,
            0.0024617018012000435,
            0.0024617018012000435,
            0.010941790684714462,
            0.010941790684714462,
            0.010941790684714462,
            0.012332876606281856,
            0.012332876606281856,
            0.012332876606281856,
            0.012332876606281856,
            0.012332876606281856,
            0.012332876606281856,
            0.0025051144192503373,
            0.0025051144192503373,
            0.0025051144192503373,
            0.0025051144192503373,
            0.0025051144192503373,
            0.0025051144192503373,
        ],
    ),
    15: (
        [
            (0.7400435401338441, 0.12997822993307806, 0.12997822993307784),
            (0.12997822993307806, 0.7400435401338441, 0.12997822993307784),
            (0.1299782299330775, 0.12997822993307762, 0.7400435401338449),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.4600769492970598, 0.4600769492970598, 0.07984610140588044),
            (0.07984610140588067, 0.4600769492970596, 0.4600769492970598),
            (0.46007694929705956, 0.07984610140588067, 0.4600769492970598),
            (0.7330839951106172, 0.18232178340719113, 0.08459422148219176),
            (0.08459422148219176, 0.7330839951106168, 0.1823217834071914),
            (0.18232178340719118, 0.08459422148219198, 0.7330839951106168),
            (0.18232178340719107, 0.7330839951106172, 0.08459422148219176),
            (0.08459422148219131, 0.18232178340719118, 0.7330839951106175),
            (0.7330839951106167, 0.08459422148219187, 0.1823217834071914),
            (0.8337725261484157, 0.15020038406523878, 0.016027089786345483),
            (0.01602708978634526, 0.8337725261484163, 0.1502003840652384),
            (0.1502003840652384, 0.016027089786345483, 0.8337725261484161),
            (0.15020038406523872, 0.8337725261484158, 0.016027089786345483),
            (0.016027089786344928, 0.15020038406523895, 0.8337725261484161),
            (0.8337725261484155, 0.016027089786345483, 0.150200384065239),
            (0.5792382424060447, 0.3231113151637127, 0.09765044243024251),
            (0.09765044243024212, 0.5792382424060452, 0.3231113151637127),
            (0.3231113151637124, 0.09765044243024235, 0.5792382424060453),
            (0.3231113151637128, 0.5792382424060447, 0.09765044243024251),
            (0.09765044243024235, 0.3231113151637124, 0.5792382424060453),
            (0.579238242406045, 0.09765044243024201, 0.32311131516371294),
            (0.4916858166302972, 0.4916858166302973, 0.016628366739405487),
            (0.01662836673940521, 0.4916858166302972, 0.4916858166302976),
            (0.49168581663029715, 0.016628366739405265, 0.4916858166302976),
            (0.5569353184097159, 0.22153234079514195, 0.22153234079514217),
            (0.22153234079514195, 0.5569353184097159, 0.22153234079514217),
            (0.22153234079514195, 0.22153234079514184, 0.5569353184097162),
            (0.39693373740906035, 0.39693373740906046, 0.2061325251818792),
            (0.20613252518187875, 0.3969337374090608, 0.39693373740906046),
            (0.39693373740906046, 0.20613252518187852, 0.396933737409061),
            (0.6735980666116939, 0.3079476814836728, 0.018454251904633345),
            (0.018454251904633068, 0.6735980666116941, 0.30794768148367285),
            (0.30794768148367224, 0.018454251904633234, 0.6735980666116945),
            (0.3079476814836728, 0.6735980666116939, 0.018454251904633345),
            (0.01845425190463268, 0.3079476814836728, 0.6735980666116945),
            (0.6735980666116939, 0.018454251904633012, 0.3079476814836731),
            (0.8873161646077997, 0.05634191769610064, 0.05634191769609964),
            (0.05634191769609975, 0.8873161646077999, 0.05634191769610031),
            (0.056341917696099975, 0.056341917696099975, 0.8873161646078),
            (0.9608512354248772, 0.03803522930110925, 0.0011135352740135884),
            (0.0011135352740138105, 0.9608512354248769, 0.03803522930110925),
            (0.0380352293011077, 0.0011135352740127002, 0.9608512354248796),
            (0.03803522930110914, 0.9608512354248773, 0.0011135352740135884),
            (0.0011135352740122562, 0.03803522930110814, 0.9608512354248796),
            (0.9608512354248768, 0.0011135352740139215, 0.03803522930110925),
        ],
        [
            0.0036987520335230646,
            0.0036987520335230646,
            0.0036987520335230646,
            0.014865209874035654,
            0.010797043968219235,
            0.010797043968219235,
            0.010797043968219235,
            0.012115004391562805,
            0.012115004391562805,
            0.012115004391562805,
            0.012115004391562805,
            0.012115004391562805,
            0.012115004391562805,
            0.005614252149439044,
            0.005614252149439044,
            0.005614252149439044,
            0.005614252149439044,
            0.005614252149439044,
            0.005614252149439044,
            0.015537610235255477,
            0.015537610235255477,
            0.015537610235255477,
            0.015537610235255477,
            0.015537610235255477,
            0.015537610235255477,
            0.007916138175010901,
            0.007916138175010901,
            0.007916138175010901,
            0.02314364305259904,
            0.02314364305259904,
            0.02314364305259904,
            0.023168020695603614,
            0.023168020695603614,
            0.023168020695603614,
            0.008218381046413958,
            0.008218381046413958,
            0.008218381046413958,
            0.008218381046413958,
            0.008218381046413958,
            0.008218381046413958,
            0.0075422371237985255,
            0.0075422371237985255,
            0.0075422371237985255,
            0.0012376330072789597,
            0.0012376330072789597,
            0.0012376330072789597,
            0.0012376330072789597,
            0.0012376330072789597,
            0.0012376330072789597,
        ],
    ),
    16: (
        [
            (0.5765655597692545, 0.4137694858270855, 0.009664954403659998),
            (0.009664954403659998, 0.5765655597692549, 0.41376948582708506),
            (0.41376948582708506, 0.009664954403659998, 0.5765655597692549),
            (0.4137694858270855, 0.5765655597692545, 0.009664954403659998),
            (0.009664954403659998, 0.41376948582708506, 0.5765655597692549),
            (0.5765655597692542, 0.00966495440366022, 0.4137694858270856),
            (0.6655146084153339, 0.30417944822947995, 0.030305943355186105),
            (0.03030594335518616, 0.665514608415334, 0.3041794482294798),
            (0.3041794482294794, 0.030305943355186327, 0.6655146084153343),
            (0.30417944822947995, 0.6655146084153339, 0.030305943355186105),
            (0.030305943355185883, 0.30417944822947984, 0.6655146084153343),
            (0.6655146084153339, 0.030305943355186105, 0.30417944822947995),
            (0.8666510555195235, 0.06667447224023859, 0.06667447224023793),
            (0.06667447224023826, 0.8666510555195233, 0.06667447224023848),
            (0.06667447224023815, 0.06667447224023815, 0.8666510555195237),
            (0.8995779382011906, 0.0896090890227057, 0.010812972776103713),
            (0.010812972776103658, 0.8995779382011907, 0.08960908902270565),
            (0.08960908902270548, 0.010812972776103824, 0.8995779382011907),
            (0.08960908902270603, 0.8995779382011903, 0.010812972776103713),
            (0.01081297277610338, 0.08960908902270592, 0.8995779382011907),
            (0.8995779382011904, 0.01081297277610338, 0.08960908902270626),
            (0.5967314670634689, 0.2966153724003829, 0.10665316053614826),
            (0.10665316053614848, 0.5967314670634685, 0.29661537240038305),
            (0.2966153724003826, 0.1066531605361487, 0.5967314670634687),
            (0.2966153724003828, 0.5967314670634689, 0.10665316053614826),
            (0.10665316053614815, 0.29661537240038316, 0.5967314670634687),
            (0.5967314670634684, 0.10665316053614837, 0.29661537240038327),
            (0.5173566385972433, 0.24132168070137844, 0.24132168070137816),
            (0.24132168070137838, 0.5173566385972435, 0.24132168070137816),
            (0.24132168070137805, 0.24132168070137816, 0.5173566385972438),
            (0.4127980959552238, 0.4127980959552238, 0.17440380808955241),
            (0.17440380808955247, 0.41279809595522343, 0.4127980959552241),
            (0.41279809595522343, 0.17440380808955247, 0.4127980959552241),
            (0.7788823295056969, 0.16976335515028995, 0.051354315344013135),
            (0.05135431534401308, 0.778882329505697, 0.1697633551502899),
            (0.16976335515028917, 0.051354315344013246, 0.7788823295056976),
            (0.1697633551502894, 0.7788823295056975, 0.051354315344013135),
            (0.05135431534401269, 0.16976335515028973, 0.7788823295056976),
            (0.778882329505697, 0.051354315344013024, 0.1697633551502899),
            (0.6998725268259298, 0.15006373658703487, 0.1500637365870353),
            (0.15006373658703487, 0.6998725268259298, 0.1500637365870353),
            (0.15006373658703498, 0.15006373658703498, 0.69987252682593),
            (0.7822542773667973, 0.21404877992584737, 0.003696942707355322),
            (0.0036969427073553773, 0.7822542773667973, 0.2140487799258473),
            (0.2140487799258468, 0.003696942707355877, 0.7822542773667973),
            (0.21404877992584737, 0.7822542773667973, 0.003696942707355322),
            (0.003696942707355433, 0.2140487799258473, 0.7822542773667973),
            (0.7822542773667973, 0.003696942707355322, 0.2140487799258473),
            (0.46954803099668485, 0.46954803099668496, 0.06090393800663019),
            (0.060903938006629965, 0.4695480309966849, 0.4695480309966852),
            (0.46954803099668485, 0.060903938006629965, 0.4695480309966852),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.9659167411885629, 0.01704162940571896, 0.017041629405718184),
            (0.017041629405718073, 0.9659167411885632, 0.01704162940571874),
            (0.017041629405719294, 0.017041629405719294, 0.9659167411885614),
        ],
        [
            0.004091105276611071,
            0.004091105276611071,
            0.004091105276611071,
            0.004091105276611071,
            0.004091105276611071,
            0.004091105276611071,
            0.006991803562326779,
            0.006991803562326779,
            0.006991803562326779,
            0.006991803562326779,
            0.006991803562326779,
            0.006991803562326779,
            0.006212712797780522,
            0.006212712797780522,
            0.006212712797780522,
            0.0028759349852485803,
            0.0028759349852485803,
            0.0028759349852485803,
            0.0028759349852485803,
            0.0028759349852485803,
            0.0028759349852485803,
            0.01582303084099163,
            0.01582303084099163,
            0.01582303084099163,
            0.01582303084099163,
            0.01582303084099163,
            0.01582303084099163,
            0.02059202053489628,
            0.02059202053489628,
            0.02059202053489628,
            0.020492609893407693,
            0.020492609893407693,
            0.020492609893407693,
            0.008826540523551647,
            0.008826540523551647,
            0.008826540523551647,
            0.008826540523551647,
            0.008826540523551647,
            0.008826540523551647,
            0.014391748351374467,
            0.014391748351374467,
            0.014391748351374467,
            0.0023073453198645686,
            0.0023073453198645686,
            0.0023073453198645686,
            0.0023073453198645686,
            0.0023073453198645686,
            0.0023073453198645686,
            0.01354683473385522,
            0.01354683473385522,
            0.01354683473385522,
            0.02311395515709569,
            0.0018945676191321123,
            0.0018945676191321123,
            0.0018945676191321123,
        ],
    ),
    17: (
        [
            (0.41710344436159924, 0.4171034443615993, 0.16579311127680146),
            (0.16579311127680113, 0.41710344436159924, 0.4171034443615996),
            (0.4171034443615987, 0.16579311127680174, 0.4171034443615996),
            (0.9159193532978172, 0.07250547079900227, 0.011575175903180579),
            (0.011575175903180801, 0.9159193532978168, 0.07250547079900238),
            (0.0725054707990026, 0.011575175903181467, 0.9159193532978159),
            (0.07250547079900216, 0.9159193532978173, 0.011575175903180579),
            (0.011575175903181023, 0.07250547079900305, 0.9159193532978159),
            (0.9159193532978168, 0.011575175903180801, 0.07250547079900238),
            (0.6392837674672587, 0.18035811626637066, 0.18035811626637066),
            (0.18035811626637066, 0.6392837674672587, 0.18035811626637066),
            (0.18035811626637033, 0.18035811626637033, 0.6392837674672593),
            (0.571294867944684, 0.415475459295229, 0.013229672760087019),
            (0.013229672760087019, 0.5712948679446839, 0.4154754592952291),
            (0.41547545929522867, 0.013229672760086797, 0.5712948679446845),
            (0.415475459295229, 0.571294867944684, 0.013229672760087019),
            (0.013229672760086686, 0.4154754592952288, 0.5712948679446845),
            (0.5712948679446839, 0.013229672760087019, 0.4154754592952291),
            (0.7150722591106426, 0.2717918700553547, 0.013135870834002583),
            (0.013135870834002583, 0.7150722591106425, 0.2717918700553549),
            (0.27179187005535443, 0.013135870834002472, 0.7150722591106431),
            (0.27179187005535477, 0.7150722591106426, 0.013135870834002583),
            (0.013135870834002694, 0.27179187005535477, 0.7150722591106425),
            (0.7150722591106425, 0.013135870834002583, 0.2717918700553549),
            (0.5432755795961596, 0.2992189424769706, 0.15750547792686975),
            (0.15750547792686975, 0.5432755795961599, 0.29921894247697034),
            (0.29921894247697, 0.15750547792686997, 0.54327557959616),
            (0.29921894247697056, 0.5432755795961597, 0.15750547792686975),
            (0.15750547792686997, 0.29921894247697, 0.54327557959616),
            (0.5432755795961597, 0.15750547792686975, 0.29921894247697056),
            (0.42858699512682663, 0.2857065024365867, 0.2857065024365867),
            (0.28570650243658663, 0.42858699512682663, 0.28570650243658674),
            (0.28570650243658663, 0.28570650243658663, 0.4285869951268268),
            (0.6263690303864523, 0.3062815917461863, 0.06734937786736139),
            (0.06734937786736117, 0.6263690303864522, 0.30628159174618663),
            (0.3062815917461862, 0.06734937786736117, 0.6263690303864526),
            (0.3062815917461863, 0.6263690303864523, 0.06734937786736139),
            (0.06734937786736117, 0.3062815917461862, 0.6263690303864526),
            (0.6263690303864521, 0.06734937786736117, 0.30628159174618674),
            (0.7532351459364584, 0.16872251349525935, 0.0780423405682823),
            (0.0780423405682823, 0.7532351459364584, 0.16872251349525935),
            (0.16872251349525924, 0.07804234056828241, 0.7532351459364584),
            (0.16872251349525935, 0.7532351459364584, 0.0780423405682823),
            (0.07804234056828219, 0.16872251349525946, 0.7532351459364584),
            (0.753235145936458, 0.07804234056828208, 0.1687225134952599),
            (0.8666918730408062, 0.06665406347959713, 0.06665406347959668),
            (0.06665406347959679, 0.8666918730408059, 0.06665406347959735),
            (0.06665406347959668, 0.06665406347959668, 0.8666918730408066),
            (0.824790070165088, 0.15919228747279301, 0.016017642362119),
            (0.016017642362119056, 0.8247900701650881, 0.15919228747279285),
            (0.15919228747279246, 0.016017642362119444, 0.8247900701650881),
            (0.15919228747279301, 0.824790070165088, 0.016017642362119),
            (0.016017642362119444, 0.15919228747279246, 0.8247900701650881),
            (0.8247900701650881, 0.01601764236211911, 0.15919228747279285),
            (0.970489016678492, 0.014755491660754072, 0.014755491660753961),
            (0.014755491660753961, 0.9704890166784921, 0.014755491660753961),
            (0.014755491660754405, 0.014755491660754516, 0.9704890166784911),
            (0.4655978716188902, 0.4655978716188902, 0.06880425676221957),
            (0.06880425676221924, 0.4655978716188902, 0.46559787161889055),
            (0.4655978716188902, 0.06880425676221924, 0.46559787161889055),
        ],
        [
            0.013655463264051078,
            0.013655463264051078,
            0.013655463264051078,
            0.0022921742008679366,
            0.0022921742008679366,
            0.0022921742008679366,
            0.0022921742008679366,
            0.0022921742008679366,
            0.0022921742008679366,
            0.013156315294008996,
            0.013156315294008996,
            0.013156315294008996,
            0.005199219977919784,
            0.005199219977919784,
            0.005199219977919784,
            0.005199219977919784,
            0.005199219977919784,
            0.005199219977919784,
            0.004346107250500591,
            0.004346107250500591,
            0.004346107250500591,
            0.004346107250500591,
            0.004346107250500591,
            0.004346107250500591,
            0.013085812967668494,
            0.013085812967668494,
            0.013085812967668494,
            0.013085812967668494,
            0.013085812967668494,
            0.013085812967668494,
            0.018858118576397655,
            0.018858118576397655,
            0.018858118576397655,
            0.011243886273345537,
            0.011243886273345537,
            0.011243886273345537,
            0.011243886273345537,
            0.011243886273345537,
            0.011243886273345537,
            0.010278949160227256,
            0.010278949160227256,
            0.010278949160227256,
            0.010278949160227256,
            0.010278949160227256,
            0.010278949160227256,
            0.006229500401152712,
            0.006229500401152712,
            0.006229500401152712,
            0.003989150102964799,
            0.003989150102964799,
            0.003989150102964799,
            0.003989150102964799,
            0.003989150102964799,
            0.003989150102964799,
            0.0013869437888188228,
            0.0013869437888188228,
            0.0013869437888188228,
            0.012509725475248692,
            0.012509725475248692,
            0.012509725475248692,
        ],
    ),
    18: (
        [
            (0.5245289252324958, 0.3850440344131638, 0.09042704035434035),
            (0.09042704035434063, 0.5245289252324956, 0.38504403441316376),
            (0.3850440344131635, 0.09042704035434057, 0.524528925232496),
            (0.3850440344131638, 0.5245289252324958, 0.09042704035434035),
            (0.09042704035434046, 0.3850440344131636, 0.524528925232496),
            (0.5245289252324955, 0.09042704035434057, 0.3850440344131639),
            (0.4749182113240459, 0.4749182113240458, 0.05016357735190835),
            (0.05016357735190846, 0.47491821132404544, 0.4749182113240461),
            (0.47491821132404544, 0.05016357735190846, 0.4749182113240461),
            (0.6967229860547901, 0.15163850697260517, 0.15163850697260467),
            (0.15163850697260434, 0.6967229860547904, 0.15163850697260522),
            (0.15163850697260461, 0.15163850697260467, 0.6967229860547907),
            (0.9402249256838529, 0.04727614183265194, 0.012498932483495206),
            (0.01249893248349565, 0.9402249256838529, 0.0472761418326515),
            (0.047276141832651164, 0.012498932483495429, 0.9402249256838534),
            (0.04727614183265183, 0.940224925683853, 0.012498932483495206),
            (0.012498932483494984, 0.04727614183265161, 0.9402249256838534),
            (0.940224925683853, 0.012498932483494984, 0.04727614183265205),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6439263069481048, 0.3020619577128708, 0.05401173533902437),
            (0.054011735339024036, 0.6439263069481052, 0.3020619577128708),
            (0.30206195771287025, 0.05401173533902426, 0.6439263069481055),
            (0.3020619577128708, 0.6439263069481048, 0.05401173533902437),
            (0.054011735339024036, 0.30206195771287103, 0.6439263069481049),
            (0.6439263069481049, 0.054011735339024036, 0.30206195771287103),
            (0.7329888214065167, 0.25650615977424174, 0.010505018819241596),
            (0.010505018819241652, 0.7329888214065167, 0.2565061597742417),
            (0.2565061597742412, 0.010505018819242151, 0.7329888214065167),
            (0.25650615977424174, 0.7329888214065167, 0.010505018819241596),
            (0.010505018819241707, 0.2565061597742416, 0.7329888214065167),
            (0.7329888214065166, 0.010505018819241707, 0.2565061597742417),
            (0.4110671018759195, 0.41106710187591944, 0.17786579624816107),
            (0.17786579624816112, 0.4110671018759191, 0.41106710187591977),
            (0.4110671018759191, 0.17786579624816112, 0.41106710187591977),
            (0.7553984164057086, 0.17847912556588774, 0.06612245802840366),
            (0.06612245802840366, 0.7553984164057087, 0.17847912556588763),
            (0.1784791255658874, 0.06612245802840333, 0.7553984164057093),
            (0.17847912556588763, 0.7553984164057087, 0.06612245802840366),
            (0.06612245802840289, 0.17847912556588785, 0.7553984164057093),
            (0.7553984164057091, 0.06612245802840322, 0.17847912556588763),
            (0.46877078018925133, 0.2656146099053744, 0.2656146099053742),
            (0.26561460990537444, 0.4687707801892514, 0.2656146099053742),
            (0.2656146099053742, 0.2656146099053742, 0.46877078018925156),
            (0.9924821113178633, 0.003758944341068382, 0.003758944341068271),
            (0.003758944341068382, 0.9924821113178633, 0.003758944341068271),
            (0.0037589443410692702, 0.0037589443410694923, 0.9924821113178612),
            (0.5823597834782126, 0.2685733063960136, 0.14906691012577378),
            (0.1490669101257734, 0.5823597834782125, 0.2685733063960141),
            (0.2685733063960136, 0.14906691012577367, 0.5823597834782127),
            (0.26857330639601407, 0.5823597834782122, 0.14906691012577378),
            (0.14906691012577367, 0.2685733063960136, 0.5823597834782127),
            (0.5823597834782124, 0.14906691012577344, 0.2685733063960141),
            (0.5772425066507144, 0.4110656686746185, 0.011691824674667006),
            (0.011691824674667117, 0.5772425066507142, 0.4110656686746187),
            (0.411065668674618, 0.011691824674667006, 0.577242506650715),
            (0.41106566867461847, 0.5772425066507145, 0.011691824674667006),
            (0.01169182467466734, 0.41106566867461836, 0.5772425066507143),
            (0.5772425066507141, 0.011691824674667228, 0.4110656686746187),
            (0.852889644949669, 0.13277883027138904, 0.014331524778941951),
            (0.014331524778941784, 0.8528896449496689, 0.13277883027138931),
            (0.1327788302713887, 0.01433152477894184, 0.8528896449496695),
            (0.13277883027138893, 0.8528896449496691, 0.014331524778941951),
            (0.014331524778941285, 0.13277883027138931, 0.8528896449496695),
            (0.8528896449496688, 0.01433152477894184, 0.13277883027138931),
            (0.8551225888653341, 0.07243870556733323, 0.07243870556733267),
            (0.07243870556733312, 0.8551225888653342, 0.07243870556733267),
            (0.07243870556733267, 0.07243870556733267, 0.8551225888653347),
        ],
        [
            0.007664129097276563,
            0.007664129097276563,
            0.007664129097276563,
            0.007664129097276563,
            0.007664129097276563,
            0.007664129097276563,
            0.006553513745869382,
            0.006553513745869382,
            0.006553513745869382,
            0.010159169422729198,
            0.010159169422729198,
            0.010159169422729198,
            0.002108758387372219,
            0.002108758387372219,
            0.002108758387372219,
            0.002108758387372219,
            0.002108758387372219,
            0.002108758387372219,
            0.015374260619557904,
            0.00818295420699328,
            0.00818295420699328,
            0.00818295420699328,
            0.00818295420699328,
            0.00818295420699328,
            0.00818295420699328,
            0.0038649176400031185,
            0.0038649176400031185,
            0.0038649176400031185,
            0.0038649176400031185,
            0.0038649176400031185,
            0.0038649176400031185,
            0.016735997029923948,
            0.016735997029923948,
            0.016735997029923948,
            0.00845582695874003,
            0.00845582695874003,
            0.00845582695874003,
            0.00845582695874003,
            0.00845582695874003,
            0.00845582695874003,
            0.01555819830100304,
            0.01555819830100304,
            0.01555819830100304,
            0.00026600280847389,
            0.00026600280847389,
            0.00026600280847389,
            0.013796443244289728,
            0.013796443244289728,
            0.013796443244289728,
            0.013796443244289728,
            0.013796443244289728,
            0.013796443244289728,
            0.004793062237180746,
            0.004793062237180746,
            0.004793062237180746,
            0.004793062237180746,
            0.004793062237180746,
            0.004793062237180746,
            0.0038208524863598036,
            0.0038208524863598036,
            0.0038208524863598036,
            0.0038208524863598036,
            0.0038208524863598036,
            0.0038208524863598036,
            0.006895143302383456,
            0.006895143302383456,
            0.006895143302383456,
        ],
    ),
    19: (
        [
            (0.8525725750765228, 0.14242228257112682, 0.005005142352350389),
            (0.005005142352350611, 0.8525725750765227, 0.14242228257112666),
            (0.14242228257112644, 0.0050051423523505, 0.8525725750765231),
            (0.14242228257112677, 0.8525725750765228, 0.005005142352350389),
            (0.005005142352349945, 0.142422282571127, 0.8525725750765231),
            (0.8525725750765228, 0.005005142352349945, 0.1424222825711272),
            (0.8949474402917929, 0.05252627985410374, 0.05252627985410341),
            (0.0525262798541033, 0.8949474402917933, 0.05252627985410341),
            (0.05252627985410341, 0.05252627985410341, 0.8949474402917932),
            (0.9301390385986206, 0.06008389996270258, 0.009777061438676848),
            (0.00977706143867696, 0.930139038598621, 0.060083899962702025),
            (0.06008389996270347, 0.009777061438678292, 0.9301390385986182),
            (0.06008389996270258, 0.9301390385986206, 0.009777061438676848),
            (0.00977706143867807, 0.06008389996270369, 0.9301390385986182),
            (0.9301390385986206, 0.009777061438676737, 0.06008389996270269),
            (0.8301568806048567, 0.13070066996053475, 0.03914244943460854),
            (0.03914244943460887, 0.8301568806048568, 0.1307006699605343),
            (0.13070066996053398, 0.03914244943460887, 0.8301568806048572),
            (0.13070066996053475, 0.8301568806048567, 0.03914244943460854),
            (0.03914244943460843, 0.13070066996053442, 0.8301568806048572),
            (0.8301568806048565, 0.03914244943460865, 0.13070066996053487),
            (0.559368807008034, 0.31131838322398697, 0.12931280976797904),
            (0.12931280976797904, 0.559368807008034, 0.3113183832239869),
            (0.31131838322398664, 0.1293128097679787, 0.5593688070080346),
            (0.3113183832239869, 0.559368807008034, 0.12931280976797904),
            (0.12931280976797865, 0.31131838322398675, 0.5593688070080346),
            (0.559368807008034, 0.129312809767979, 0.311318383223987),
            (0.7771038885660027, 0.11144805571699867, 0.11144805571699862),
            (0.11144805571699873, 0.7771038885660027, 0.11144805571699862),
            (0.11144805571699867, 0.11144805571699862, 0.7771038885660028),
            (0.9767219453441549, 0.01163902732792299, 0.011639027327922102),
            (0.011639027327922657, 0.9767219453441547, 0.011639027327922657),
            (0.011639027327923213, 0.011639027327923213, 0.9767219453441536),
            (0.48967573369375017, 0.25516213315312525, 0.2551621331531245),
            (0.25516213315312436, 0.48967573369375045, 0.25516213315312514),
            (0.25516213315312475, 0.25516213315312486, 0.4896757336937504),
            (0.7040048688065316, 0.22143394188911358, 0.07456118930435485),
            (0.07456118930435535, 0.7040048688065312, 0.22143394188911342),
            (0.22143394188911303, 0.07456118930435518, 0.7040048688065318),
            (0.22143394188911358, 0.7040048688065316, 0.07456118930435485),
            (0.07456118930435507, 0.22143394188911314, 0.7040048688065318),
            (0.7040048688065312, 0.07456118930435529, 0.22143394188911342),
            (0.4039697179663862, 0.40396971796638614, 0.19206056406722766),
            (0.19206056406722788, 0.4039697179663859, 0.4039697179663862),
            (0.40396971796638587, 0.19206056406722793, 0.4039697179663862),
            (0.6050857585353099, 0.3540259269997119, 0.040888314464978204),
            (0.04088831446497798, 0.6050857585353101, 0.3540259269997119),
            (0.3540259269997118, 0.04088831446497787, 0.6050857585353103),
            (0.3540259269997119, 0.6050857585353099, 0.040888314464978204),
            (0.04088831446497776, 0.35402592699971186, 0.6050857585353103),
            (0.60508575853531, 0.04088831446497787, 0.3540259269997122),
            (0.6436579878407453, 0.17817100607962738, 0.17817100607962727),
            (0.17817100607962705, 0.6436579878407451, 0.17817100607962782),
            (0.17817100607962733, 0.17817100607962721, 0.6436579878407455),
            (0.4591943889568275, 0.45919438895682757, 0.08161122208634497),
            (0.08161122208634453, 0.4591943889568276, 0.45919438895682785),
            (0.4591943889568275, 0.08161122208634464, 0.45919438895682785),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.49251244986587417, 0.49251244986587434, 0.01497510026825144),
            (0.014975100268251329, 0.4925124498658744, 0.4925124498658743),
            (0.49251244986587384, 0.014975100268251884, 0.4925124498658743),
            (0.7431822570856689, 0.24189410400689287, 0.014923638907438197),
            (0.014923638907438641, 0.7431822570856685, 0.24189410400689282),
            (0.24189410400689215, 0.014923638907438308, 0.7431822570856695),
            (0.24189410400689282, 0.743182257085669, 0.014923638907438197),
            (0.014923638907438641, 0.24189410400689254, 0.7431822570856689),
            (0.7431822570856691, 0.014923638907438086, 0.24189410400689282),
            (0.6333104818121879, 0.3646204143387098, 0.002069103849102416),
            (0.0020691038491024716, 0.6333104818121874, 0.3646204143387101),
            (0.3646204143387096, 0.002069103849102527, 0.6333104818121879),
            (0.36462041433870973, 0.6333104818121879, 0.002069103849102416),
            (0.002069103849102083, 0.36462041433871006, 0.6333104818121879),
            (0.6333104818121873, 0.002069103849102305, 0.36462041433871034),
        ],
        [
            0.0014628462439400345,
            0.0014628462439400345,
            0.0014628462439400345,
            0.0014628462439400345,
            0.0014628462439400345,
            0.0014628462439400345,
            0.00355469681139747,
            0.00355469681139747,
            0.00355469681139747,
            0.0016636944202969518,
            0.0016636944202969518,
            0.0016636944202969518,
            0.0016636944202969518,
            0.0016636944202969518,
            0.0016636944202969518,
            0.004847759540812113,
            0.004847759540812113,
            0.004847759540812113,
            0.004847759540812113,
            0.004847759540812113,
            0.004847759540812113,
            0.013173132353722668,
            0.013173132353722668,
            0.013173132353722668,
            0.013173132353722668,
            0.013173132353722668,
            0.013173132353722668,
            0.007617478258502402,
            0.007617478258502402,
            0.007617478258502402,
            0.0008825962091542712,
            0.0008825962091542712,
            0.0008825962091542712,
            0.015876427293764983,
            0.015876427293764983,
            0.015876427293764983,
            0.009054037295215247,
            0.009054037295215247,
            0.009054037295215247,
            0.009054037295215247,
            0.009054037295215247,
            0.009054037295215247,
            0.015768679322619814,
            0.015768679322619814,
            0.015768679322619814,
            0.008051104730469728,
            0.008051104730469728,
            0.008051104730469728,
            0.008051104730469728,
            0.008051104730469728,
            0.008051104730469728,
            0.012325990526792426,
            0.012325990526792426,
            0.012325990526792426,
            0.011491785488561616,
            0.011491785488561616,
            0.011491785488561616,
            0.017234580425452638,
            0.005160941091209433,
            0.005160941091209433,
            0.005160941091209433,
            0.004227962419546743,
            0.004227962419546743,
            0.004227962419546743,
            0.004227962419546743,
            0.004227962419546743,
            0.004227962419546743,
            0.0016410687574198676,
            0.0016410687574198676,
            0.0016410687574198676,
            0.0016410687574198676,
            0.0016410687574198676,
            0.0016410687574198676,
        ],
    ),
}
