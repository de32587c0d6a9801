"""
Acceptance criteria 1-10.

Each test records one PASS/FAIL line in ``RESULTS``; the lines are printed
in the terminal summary (see conftest.py) and on stdout. The expensive AFEM
runs are module fixtures shared between criteria.
"""
import time

import numpy as np
import pytest

from measure_ocp.afem import AfemConfig, afem_loop, fit_rate
from measure_ocp.benchmarks import SQUARE_ALPHAS, example_disk, example_lshape, example_square
from measure_ocp.mesh import interior_nodes
from measure_ocp.ocp import fista_oracle, semismooth_newton

pytestmark = pytest.mark.acceptance

RESULTS = {}

DISK_MAX_NDOF = 100_000
SQUARE_MAX_NDOF = 20_000
LSHAPE_MAX_NDOF = 10_000
RUNTIME_LIMIT = 300.0


def _report(number, title, checks):
    """Store and print one line for a criterion, then assert it."""
    ok = all(passed for passed, _ in checks)
    detail = "; ".join(text for _, text in checks)
    line = "criterion {:>2} {}: {}  [{}]".format(number, "PASS" if ok else "FAIL", title, detail)
    RESULTS[number] = line
    print(line)
    assert ok, line


def _in(value, lo, hi):
    return lo <= value <= hi


class Run:
    """An AFEM run plus what criteria 5 and 6 need from every iteration."""

    def __init__(self, name, problem, config):
        self.name = name
        self.alpha = problem.alpha
        self.problems = []
        self.worst = dict(kkt=0.0, bound=-np.inf, sign=0.0)
        start = time.perf_counter()
        self.history = afem_loop(problem, config, callback=self._observe)
        self.elapsed = time.perf_counter() - start

    def _observe(self, record, problem, sol, est):
        if len(self.problems) < 3:
            self.problems.append((problem, sol.u.coefficients.copy()))
        p, u = sol.p.interior_values, sol.u.coefficients
        on = np.abs(u) > 1e-10
        w = self.worst
        w["kkt"] = max(w["kkt"], sol.kkt_residual)
        w["bound"] = max(w["bound"], np.abs(p).max() - self.alpha)
        if on.any():
            w["sign"] = max(w["sign"], np.abs(p[on] + self.alpha * np.sign(u[on])).max())


@pytest.fixture(scope="module")
def disk_adaptive():
    problem, exact = example_disk()
    return Run("disk adaptive", problem,
               AfemConfig(max_iter=10_000, max_ndof=DISK_MAX_NDOF, exact=exact))


@pytest.fixture(scope="module")
def disk_uniform():
    problem, exact = example_disk()
    return Run("disk uniform", problem,
               AfemConfig(max_iter=100, max_ndof=DISK_MAX_NDOF, refinement="uniform",
                          exact=exact))


@pytest.fixture(scope="module")
def square_runs():
    return [Run("square alpha={:g}".format(a), example_square(a),
                AfemConfig(max_iter=10_000, max_ndof=SQUARE_MAX_NDOF))
            for a in SQUARE_ALPHAS]


@pytest.fixture(scope="module")
def lshape_adaptive():
    return Run("lshape adaptive", example_lshape(),
               AfemConfig(max_iter=10_000, max_ndof=LSHAPE_MAX_NDOF))


@pytest.fixture(scope="module")
def all_runs(disk_adaptive, disk_uniform, square_runs, lshape_adaptive):
    return [disk_adaptive, disk_uniform] + square_runs + [lshape_adaptive]


def test_criterion_1_disk_adaptive_rate(disk_adaptive):
    h = disk_adaptive.history
    slope = fit_rate(h, "err_y_l2", window=10)
    _report(1, "disk adaptive L2 state error rate", [
        (_in(slope, -1.2, -0.85), "slope last 10 = {:.3f} in [-1.2, -0.85]".format(slope)),
        (h[-1].ndof >= 0.5 * DISK_MAX_NDOF, "final Ndof = {}".format(h[-1].ndof)),
        (disk_adaptive.elapsed <= RUNTIME_LIMIT,
         "runtime {:.0f} s <= {:.0f} s".format(disk_adaptive.elapsed, RUNTIME_LIMIT)),
    ])


def test_criterion_2_disk_uniform_rate(disk_uniform):
    h = disk_uniform.history
    window = min(10, len(h))
    slope = fit_rate(h, "err_y_l2", window=window)
    _report(2, "disk uniform L2 state error rate", [
        (_in(slope, -0.65, -0.4),
         "slope last {} = {:.3f} in [-0.65, -0.4]".format(window, slope)),
        (len(h) >= 5, "{} levels up to Ndof {}".format(len(h), h[-1].ndof)),
    ])


def test_criterion_3_disk_estimator_rates(disk_adaptive):
    h = disk_adaptive.history
    checks = []
    for q in ("est_total", "est_y", "est_p"):
        s = fit_rate(h, q, window=10)
        checks.append((_in(s, -1.25, -0.8), "{} slope {:.3f}".format(q, s)))
    _report(3, "disk adaptive estimator rates in [-1.25, -0.8]", checks)


def test_criterion_4_effectivity(disk_adaptive):
    last = disk_adaptive.history[-15:]
    eff = np.array([r.est_total / r.err_combined for r in last])
    spread = eff.max() / eff.min()
    # a trend is the fitted change of log(eff) across the window
    logn = np.log([r.ndof for r in last])
    trend = np.exp(abs(np.polyfit(logn, np.log(eff), 1)[0]) * (logn[-1] - logn[0]))
    _report(4, "disk effectivity over the last 15 iterations", [
        (len(last) == 15, "{} iterations".format(len(last))),
        (spread < 10, "max/min = {:.2f} < 10 (range {:.3g}..{:.3g})".format(
            spread, eff.min(), eff.max())),
        (trend < 10, "fitted trend factor {:.2f} < 10".format(trend)),
    ])


def test_criterion_5_optimality_structure(all_runs):
    checks = []
    for run in all_runs:
        w = run.worst
        ok = w["kkt"] <= 1e-9 and w["bound"] <= 1e-8 and w["sign"] <= 1e-8
        checks.append((ok, "{} ({} its): kkt {:.1e}, max|p|-a {:.1e}, sign {:.1e}".format(
            run.name, len(run.history), w["kkt"], w["bound"], w["sign"])))
    _report(5, "optimality structure at every iteration", checks)


def test_criterion_6_ssn_vs_fista(all_runs):
    checks = []
    for run in all_runs:
        if run.name == "disk uniform":
            continue        # same initial mesh as the adaptive disk run
        worst = 0.0
        for problem, _ in run.problems:
            ssn = semismooth_newton(problem).u.coefficients
            ref = fista_oracle(problem).coefficients
            worst = max(worst, np.abs(ssn - ref).max())
        checks.append((worst <= 1e-8 and len(run.problems) == 3,
                       "{}: {:.1e}".format(run.name, worst)))
    _report(6, "SSN vs FISTA on the coarsest three meshes (l-inf <= 1e-8)", checks)


def test_criterion_7_control_localization(disk_adaptive):
    h = disk_adaptive.history
    mesh, u = h.mesh, h.solution.u.coefficients
    i = int(np.argmax(np.abs(u)))
    node = interior_nodes(mesh)[i]
    around = np.any(mesh.triangles == node, axis=1)
    h_local = mesh.h[around].max()
    dist = np.hypot(*mesh.vertices[node])
    mass = np.abs(u).sum()
    _report(7, "disk control localization on the finest mesh", [
        (dist <= 2 * h_local, "|x_argmax| = {:.2e} <= 2 h_loc = {:.2e}".format(
            dist, 2 * h_local)),
        (abs(mass - 1) <= 0.1, "mass = {:.4f}".format(mass)),
    ])


UNIT_CHECKS = [
    ("test_mesh", "test_initial_meshes_valid"),
    ("test_mesh", "test_closure_bisects_neighbour"),
    ("test_mesh", "test_min_angle_over_ten_sweeps"),
    ("test_mesh", "test_refine_property"),
    ("test_quadrature", "test_monomial_exactness"),
    ("test_quadrature", "test_degree19_polynomial_on_random_triangle"),
    ("test_fem", "test_reference_stiffness"),
    ("test_fem", "test_reference_mass"),
    ("test_estimators", "test_affine_fields_give_zero"),
    ("test_estimators", "test_state_indicator_hand_value"),
    ("test_fem", "test_poisson_manufactured_rate"),
]


def test_criterion_8_unit_suites():
    """Re-run the unit checks named by the criterion through pytest itself."""
    import subprocess
    import sys
    from pathlib import Path
    here = Path(__file__).parent
    ids = ["{}/{}.py::{}".format(here, mod, name) for mod, name in UNIT_CHECKS]
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           *ids], capture_output=True, text=True, cwd=here.parent)
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr
    _report(8, "unit and property suites", [
        (proc.returncode == 0, "{} named checks: {}".format(len(ids), summary)),
    ])


def test_criterion_9_square_sweep(square_runs):
    checks = []
    for run in square_runs:
        s = fit_rate(run.history, "est_total", window=10)
        checks.append((_in(s, -1.25, -0.75), "a={:g}: slope {:.3f} (Ndof {})".format(
            run.alpha, s, run.history[-1].ndof)))
    by_alpha = sorted(square_runs, key=lambda r: r.alpha)
    masses = [r.history[-1].control_mass for r in by_alpha]
    checks.append((all(a >= b for a, b in zip(masses, masses[1:])),
                   "mass by increasing alpha " + ", ".join("{:.4g}".format(m) for m in masses)))
    _report(9, "square alpha sweep", checks)


def test_criterion_10_lshape(lshape_adaptive):
    h = lshape_adaptive.history
    s = fit_rate(h, "est_total", window=10)
    mesh, u = h.mesh, h.solution.u.coefficients
    points = [np.zeros(2)]
    # where the control concentrates: nodes carrying its mass
    support = np.abs(u) >= 1e-3 * np.abs(u).max()
    points += list(mesh.vertices[interior_nodes(mesh)[support]])
    points = np.array(points)
    smallest = np.argsort(mesh.h)[:10]
    c = mesh.centroids[smallest]
    dist = np.sqrt(((c[:, None, :] - points[None]) ** 2).sum(-1)).min(axis=1)
    _report(10, "L-shape adaptive run", [
        (_in(s, -1.25, -0.75), "est_total slope last 10 = {:.3f} (Ndof {})".format(
            s, h[-1].ndof)),
        (dist.max() <= 0.1, "10 smallest elements within {:.3f} of corner or control "
                            "support".format(dist.max())),
    ])
