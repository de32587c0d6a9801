"""
The adaptive loop SOLVE -> ESTIMATE -> MARK -> REFINE.
"""

import logging
import time
from dataclasses import asdict, dataclass, fields

import numpy as np

from .estimators import IndicatorField, estimate
from .fem import error_l2, error_linf
from .mesh import interior_nodes, refine, uniform_refine
from .ocp import semismooth_newton

__all__ = [
    "ConvergenceRecord", "AfemConfig", "AfemHistory", "AfemError", "mark",
    "afem_loop", "fit_rate", "ndof",
]

log = logging.getLogger(__name__)


@dataclass
class ConvergenceRecord:
    iteration: int
    ndof: int
    ntri: int
    hmax: float
    est_y: float
    est_p: float
    est_total: float
    ell: float
    err_y_l2: float = None
    err_p_linf: float = None
    err_combined: float = None
    kkt_res: float = None
    newton_iters: int = None
    control_mass: float = None

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]

    def as_dict(self):
        return asdict(self)


@dataclass
class AfemConfig:
    """
    Parameters of the adaptive loop.

    Attributes
    ----------
    theta : float
        Marking fraction in (0, 1]: elements with indicator at least
        ``theta`` times the largest one are refined.
    max_iter : int
        Maximum number of SOLVE steps (records).
    max_ndof : int
        The loop stops before solving on a mesh with more degrees of freedom.
    refinement : str
        ``"adaptive"`` or ``"uniform"``.
    exact : ExactSolution, optional
        When given, errors against it are recorded.
    tol : float
        Solver tolerance on the optimality residual.
    accept_tol : float
        Residual still accepted when ``tol`` is out of reach because of
        roundoff (see :func:`semismooth_newton`).
    snap : bool
        Project new boundary vertices of curved domains onto the boundary.
    error_degree : int
        Quadrature degree for the error norms.
    """
    theta: float = 0.5
    max_iter: int = 40
    max_ndof: int = 100_000
    refinement: str = "adaptive"
    exact: object = None
    tol: float = 1e-10
    accept_tol: float = 1e-9
    snap: bool = True
    error_degree: int = 19

    def __post_init__(self):
        if not 0 < self.theta <= 1:
            raise ValueError("theta must lie in (0, 1], got {}".format(self.theta))
        if self.refinement not in ("adaptive", "uniform"):
            raise ValueError("refinement must be 'adaptive' or 'uniform'")
        if self.max_iter < 1 or self.max_ndof < 1:
            raise ValueError("max_iter and max_ndof must be positive")
        if not 0 < self.tol <= self.accept_tol:
            raise ValueError("need 0 < tol <= accept_tol")


class AfemHistory(list):
    """
    Records of an adaptive run, one per iteration.

    The last problem, solution and estimate are kept as attributes.
    """
    problem = None
    solution = None
    estimate = None
    elapsed = 0.0

    @property
    def mesh(self):
        return None if self.problem is None else self.problem.mesh


class AfemError(RuntimeError):
    """A stage of the loop failed; ``history`` holds the records so far."""

    def __init__(self, message, history):
        super().__init__(message)
        self.history = history


def ndof(mesh):
    """Degrees of freedom of state, adjoint and control: 3 per interior node."""
    return 3 * mesh.num_interior


def mark(indicators, theta=0.5):
    """
    Maximum strategy: indices T with indicator >= theta * max.

    Raises
    ------
    ValueError
        If the field is empty or identically zero (nothing to refine).
    """
    values = indicators.values if isinstance(indicators, IndicatorField) \
        else np.asarray(indicators, dtype=float)
    if not 0 < theta <= 1:
        raise ValueError("theta must lie in (0, 1]")
    if values.size == 0:
        raise ValueError("empty indicator field")
    top = values.max()
    if not top > 0:
        raise ValueError("all indicators vanish: the discrete solution is exact")
    return np.flatnonzero(values >= theta * top)


def _carry_over(old_mesh, new_mesh, u):
    """Old nodes keep their masses, new nodes start at zero."""
    values = np.zeros(new_mesh.num_vertices)
    values[interior_nodes(old_mesh)] = u
    return values[interior_nodes(new_mesh)]


# Refinements in a row that may leave the interior node set unchanged.
_MAX_SILENT_REFINES = 50


def _solve_estimate(problem, u0, config):
    sol = semismooth_newton(problem, tol=config.tol, u0=u0, accept_tol=config.accept_tol)
    return sol, estimate(problem, sol)


def afem_loop(problem, config=None, callback=None):
    """
    Run the adaptive (or uniform) loop.

    Each record belongs to one SOLVE on a mesh with more interior nodes
    than the previous one. When a refinement only splits boundary edges
    the discrete spaces do not change (the new nodes carry no degree of
    freedom); the loop then re-solves and re-estimates on the finer mesh
    without emitting a record and refines again.

    Parameters
    ----------
    problem : OcpProblem
        Problem on the initial mesh.
    config : AfemConfig, optional
    callback : callable, optional
        Called as ``callback(record, problem, solution, estimate)`` after
        every iteration.

    Returns
    -------
    AfemHistory
        List of :class:`ConvergenceRecord`.

    Raises
    ------
    AfemError
        If solving, estimating or refining fails; carries the partial history.
    """
    config = AfemConfig() if config is None else config
    history = AfemHistory()
    start = time.perf_counter()

    def fail(message, exc):
        history.elapsed = time.perf_counter() - start
        return AfemError("{}: {}".format(message, exc), history)

    try:
        sol, est = _solve_estimate(problem, None, config)
    except Exception as exc:
        raise fail("iteration 0 failed", exc) from exc
    current = problem
    for k in range(config.max_iter):
        mesh = current.mesh
        record = ConvergenceRecord(
            iteration=k, ndof=ndof(mesh), ntri=mesh.num_triangles,
            hmax=float(mesh.h.max()), est_y=est.est_y, est_p=est.est_p,
            est_total=est.est_total, ell=est.ell, kkt_res=sol.kkt_residual,
            newton_iters=sol.newton_iterations, control_mass=sol.u.norm())
        if config.exact is not None:
            ex = config.exact
            record.err_y_l2 = error_l2(sol.y, ex.state, config.error_degree)
            record.err_p_linf = error_linf(sol.p, lambda x, y: ex.adjoint(x, y, current.alpha),
                                           config.error_degree)
            record.err_combined = float(np.hypot(record.err_y_l2, record.err_p_linf))
        history.append(record)
        history.problem, history.solution, history.estimate = current, sol, est
        log.info("afem %d: ndof %d, est %.3e, newton %d", k, record.ndof,
                 record.est_total, record.newton_iters)
        if callback is not None:
            callback(record, current, sol, est)
        if k == config.max_iter - 1:
            break
        coarse, coarse_sol, coarse_est = mesh, sol, est
        for _ in range(_MAX_SILENT_REFINES):
            try:
                if config.refinement == "uniform":
                    new_mesh = uniform_refine(coarse, snap=config.snap)
                else:
                    new_mesh = refine(coarse, mark(coarse_est.total_sq, config.theta),
                                      snap=config.snap)
            except ValueError as exc:
                raise fail("refinement after iteration {} failed".format(k), exc) from exc
            u0 = _carry_over(coarse, new_mesh, coarse_sol.u.coefficients)
            if ndof(new_mesh) > ndof(mesh) or ndof(new_mesh) > config.max_ndof:
                break
            log.debug("refinement added no interior node, refining again")
            try:
                coarse_sol, coarse_est = _solve_estimate(current.with_mesh(new_mesh), u0, config)
            except Exception as exc:
                raise fail("iteration {} failed".format(k + 1), exc) from exc
            coarse = new_mesh
        else:
            raise fail("refinement after iteration {} failed".format(k),
                       "no new interior node after {} refinements".format(_MAX_SILENT_REFINES))
        if ndof(new_mesh) > config.max_ndof:
            break
        current = current.with_mesh(new_mesh)
        try:
            sol, est = _solve_estimate(current, u0, config)
        except Exception as exc:
            raise fail("iteration {} failed".format(k + 1), exc) from exc
    history.elapsed = time.perf_counter() - start
    return history


def fit_rate(records, quantity, window=None):
    """
    Least-squares slope of log(quantity) against log(ndof).

    Parameters
    ----------
    records : sequence of ConvergenceRecord
    quantity : str or callable
        Record attribute name, or a function of a record.
    window : int, optional
        Use only the last ``window`` records (all by default).

    Raises
    ------
    ValueError
        For fewer than 3 records or nonpositive values.
    """
    get = quantity if callable(quantity) else (lambda r: getattr(r, quantity))
    recs = list(records)
    if window is not None:
        recs = recs[-window:]
    if len(recs) < 3:
        raise ValueError("need at least 3 records to fit a rate")
    x = np.array([r.ndof for r in recs], dtype=float)
    q = np.array([get(r) for r in recs], dtype=float)
    if np.any(~np.isfinite(q)) or np.any(q <= 0) or np.any(x <= 0):
        raise ValueError("rates need positive values")
    slope, _ = np.polyfit(np.log(x), np.log(q), 1)
    return float(slope)
