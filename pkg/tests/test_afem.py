import numpy as np
import pytest

from measure_ocp.afem import (AfemConfig, AfemError, ConvergenceRecord, afem_loop, fit_rate,
                              mark, ndof)
from measure_ocp.benchmarks import example_disk, example_square
from measure_ocp.estimators import IndicatorField
from measure_ocp.ocp import ConvergenceError


def test_mark_examples():
    assert list(mark(IndicatorField([4.0, 1.0, 1.0], "total_sq"), 0.5)) == [0]
    assert list(mark(np.full(5, 2.0), 0.5)) == [0, 1, 2, 3, 4]
    assert list(mark([1.0, 3.0, 3.0, 2.9], 1.0)) == [1, 2]


def test_mark_errors():
    with pytest.raises(ValueError):
        mark(np.zeros(4))
    with pytest.raises(ValueError):
        mark(np.array([]))
    with pytest.raises(ValueError):
        mark([1.0], theta=0.0)


def test_config_validation():
    with pytest.raises(ValueError):
        AfemConfig(theta=1.5)
    with pytest.raises(ValueError):
        AfemConfig(refinement="greedy")
    with pytest.raises(ValueError):
        AfemConfig(max_iter=0)
    with pytest.raises(ValueError):
        AfemConfig(tol=1e-8, accept_tol=1e-9)


def _rec(n, q):
    return ConvergenceRecord(0, n, 0, 0.0, q, q, q, 0.0)


def test_fit_rate():
    N = np.array([100, 400, 1600, 6400, 25600])
    recs = [_rec(n, 3.0 / n) for n in N]
    assert fit_rate(recs, "est_total") == pytest.approx(-1.0, abs=1e-12)
    assert fit_rate([_rec(n, 2.0) for n in N], "est_y") == pytest.approx(0.0, abs=1e-12)
    rng = np.random.default_rng(0)
    N = np.geomspace(1e2, 1e5, 25)
    noisy = [_rec(int(n), 5 * n ** -0.5 * np.exp(0.05 * rng.normal())) for n in N]
    assert fit_rate(noisy, "est_p") == pytest.approx(-0.5, abs=0.05)
    assert fit_rate(noisy, lambda r: r.est_p ** 2, window=10) == pytest.approx(-1.0, abs=0.1)
    with pytest.raises(ValueError):
        fit_rate(recs[:2], "est_y")
    with pytest.raises(ValueError):
        fit_rate([_rec(n, 0.0) for n in N], "est_y")


def test_single_iteration_record():
    problem, exact = example_disk()
    hist = afem_loop(problem, AfemConfig(max_iter=1, exact=exact))
    assert len(hist) == 1
    assert hist[0].ndof == 3 * problem.mesh.num_interior == ndof(problem.mesh)
    assert hist.solution is not None and hist.mesh is problem.mesh


def test_adaptive_loop_properties():
    problem = example_square(1e-3)
    config = AfemConfig(max_iter=12)
    a = afem_loop(problem, config)
    b = afem_loop(problem, config)
    assert [r.as_dict() for r in a] == [r.as_dict() for r in b]
    nd = [r.ndof for r in a]
    assert all(x < y for x, y in zip(nd, nd[1:]))
    for r in a:
        assert r.est_total ** 2 == pytest.approx(r.est_y ** 2 + r.est_p ** 2)
        assert r.kkt_res <= 1e-10 and r.est_total > 0
        assert r.err_y_l2 is None
    assert a.mesh.num_interior * 3 == nd[-1]


def test_max_ndof_stops_before_solving():
    problem = example_square(1e-3)
    hist = afem_loop(problem, AfemConfig(max_iter=100, max_ndof=300))
    assert hist[-1].ndof <= 300 and len(hist) < 100


def test_uniform_mode_quadruples_elements():
    problem, exact = example_disk()
    hist = afem_loop(problem, AfemConfig(max_iter=4, refinement="uniform", exact=exact))
    nt = [r.ntri for r in hist]
    assert nt == [8 * 4 ** k for k in range(4)]
    assert all(r.err_combined == pytest.approx(np.hypot(r.err_y_l2, r.err_p_linf))
               for r in hist)


def test_callback_and_error_propagation(monkeypatch):
    problem = example_square(1e-3)
    seen = []
    afem_loop(problem, AfemConfig(max_iter=3), callback=lambda r, *a: seen.append(r.iteration))
    assert seen == [0, 1, 2]

    def boom(record, *args):
        if record.iteration == 2:
            raise RuntimeError("stop")

    with pytest.raises(RuntimeError):
        afem_loop(problem, AfemConfig(max_iter=5), callback=boom)
    # a solver failure carries the partial history
    import measure_ocp.afem as afem_mod
    real = afem_mod.semismooth_newton

    def flaky(prob, *args, **kw):
        if prob.mesh.num_interior > 20:
            raise ConvergenceError("no luck")
        return real(prob, *args, **kw)

    monkeypatch.setattr(afem_mod, "semismooth_newton", flaky)
    with pytest.raises(AfemError) as info:
        afem_loop(problem, AfemConfig(max_iter=6))
    partial = info.value.history
    assert len(partial) >= 2 and all(r.ndof <= 60 for r in partial)
    assert isinstance(info.value.__cause__, ConvergenceError)
