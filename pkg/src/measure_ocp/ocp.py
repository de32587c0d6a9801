"""
Discrete sparse optimal control with nodal Dirac controls.

Pairing a control sum_i u_i delta_{x_i} with the hat function phi_j gives
u_j, so the discrete problem collapses onto the coefficient vector u::

    min_u  1/2 |y(u) - y_d|^2_{L2} + alpha * |u|_1,   K y(u) = u,

whose gradient is the discrete adjoint p(u) = K^{-1}(M y(u) - b_d). The
optimality condition 0 in p + alpha * d|u|_1 is written as the fixed point
u = S_{c alpha}(u - c p(u)) of the soft-threshold map S and solved by a
semismooth Newton (primal-dual active set) iteration. An accelerated
proximal gradient solver is kept as an independent check.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse as sp
from scipy.sparse import linalg as spla

from .fem import (ControlMeasure, FeFunction, assemble_load_l2, assemble_mass,
                  assemble_stiffness, error_l2)
from .linalg import SPDFactor

__all__ = [
    "OcpProblem", "OcpSolution", "ConvergenceError", "reduce", "solve_state",
    "solve_adjoint", "soft_threshold", "reduced_gradient", "optimality_residual",
    "semismooth_newton", "fista_oracle", "reduced_cost",
]

log = logging.getLogger(__name__)


class ConvergenceError(RuntimeError):
    """Iteration cap reached; carries the last iterate and its residual."""

    def __init__(self, message, u=None, residual=None):
        super().__init__(message)
        self.u = u
        self.residual = residual


@dataclass
class OcpProblem:
    """
    Sparse control problem on a fixed mesh.

    Attributes
    ----------
    mesh : Mesh
    alpha : float
        Sparsity parameter, must be positive.
    y_d : callable
        Desired state ``y_d(x, y)``.
    quad_degree : int
        Quadrature degree for the load (y_d, phi_j) and the cost.
    """
    mesh: object
    alpha: float
    y_d: object
    quad_degree: int = 19

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("alpha must be positive, got {}".format(self.alpha))
        if not callable(self.y_d):
            raise TypeError("y_d must be callable as y_d(x, y)")

    def with_mesh(self, mesh):
        return OcpProblem(mesh, self.alpha, self.y_d, self.quad_degree)


@dataclass
class OcpSolution:
    y: FeFunction
    p: FeFunction
    u: ControlMeasure
    kkt_residual: float
    newton_iterations: int
    cost: float


def reduce(problem):
    """
    Interior-restricted stiffness ``K``, mass ``M`` and load ``b_d``.

    Raises
    ------
    ValueError
        If the mesh has no interior node.
    """
    mesh = problem.mesh
    if mesh.num_interior == 0:
        raise ValueError("mesh has no interior nodes: the control space is empty")
    K = assemble_stiffness(mesh)
    M = assemble_mass(mesh)
    b_d = assemble_load_l2(mesh, problem.y_d, problem.quad_degree)
    return K, M, b_d


def _factor(K):
    return K if isinstance(K, SPDFactor) else SPDFactor(K)


def _matrix(K):
    return K.A if isinstance(K, SPDFactor) else K


def solve_state(K, u, mesh=None):
    """
    Discrete state for the control ``u``.

    ``u`` is a :class:`ControlMeasure` (an :class:`FeFunction` is
    returned) or a bare coefficient vector (a coefficient vector is
    returned). ``K`` may be a matrix or an :class:`SPDFactor`.
    """
    coeffs = u.coefficients if isinstance(u, ControlMeasure) else np.asarray(u, dtype=float)
    y = _factor(K).solve(coeffs)
    if isinstance(u, ControlMeasure):
        return FeFunction.from_interior(u.mesh, y)
    return FeFunction.from_interior(mesh, y) if mesh is not None else y


def solve_adjoint(K, M, b_d, y, mesh=None):
    """Discrete adjoint: K p = M y - b_d (same conventions as :func:`solve_state`)."""
    yc = y.interior_values if isinstance(y, FeFunction) else np.asarray(y, dtype=float)
    p = _factor(K).solve(M @ yc - b_d)
    if isinstance(y, FeFunction):
        return FeFunction.from_interior(y.mesh, p)
    return FeFunction.from_interior(mesh, p) if mesh is not None else p


def soft_threshold(v, tau):
    """Componentwise sign(v) * max(|v| - tau, 0)."""
    if tau < 0:
        raise ValueError("threshold must be nonnegative")
    v = np.asarray(v, dtype=float)
    return np.sign(v) * np.maximum(np.abs(v) - tau, 0.0)


def reduced_gradient(K, M, b_d, u):
    """p(u) = K^{-1}(M K^{-1} u - b_d)."""
    F = _factor(K)
    return F.solve(M @ F.solve(u) - b_d)


def optimality_residual(K, M, b_d, u, alpha, c=1.0):
    """Max-norm of u - S_{c alpha}(u - c p(u))."""
    u = np.asarray(u, dtype=float)
    if u.size == 0:
        return 0.0
    p = reduced_gradient(K, M, b_d, u)
    return float(np.abs(u - soft_threshold(u - c * p, c * alpha)).max())


def reduced_cost(M, b_d, y, u, alpha):
    """Cost up to the constant 1/2 |y_d|^2: 1/2 y.My - b_d.y + alpha |u|_1."""
    return 0.5 * y @ (M @ y) - b_d @ y + alpha * np.abs(u).sum()


# Active or bound sets up to this size are handled with dense columns of
# P = K^-1 M K^-1 instead of a sparse saddle point factorization.
_DENSE_ACTIVE = 200


class _ReducedSystem:
    """Factorized coefficient problem: p(u) = P u + p0, P = K^-1 M K^-1."""

    def __init__(self, K, M, b_d):
        self.K, self.M, self.b_d = K, M, b_d
        self.F = SPDFactor(K)
        self.n = K.shape[0]
        self.p0 = self.F.solve(-b_d)
        self._FM = None
        self._cols = {}

    @property
    def FM(self):
        if self._FM is None:
            self._FM = SPDFactor(self.M)
        return self._FM

    def apply_P(self, v):
        return self.F.solve(self.M @ self.F.solve(v))

    def adjoint(self, u):
        return self.F.solve(self.M @ self.F.solve(u) - self.b_d)

    def residual(self, u, alpha, c=1.0):
        p = self.adjoint(u)
        return float(np.abs(u - soft_threshold(u - c * p, c * alpha)).max(initial=0.0)), p

    def columns(self, idx):
        """Columns P[:, idx], cached per node."""
        missing = [i for i in idx if i not in self._cols]
        if missing:
            E = np.zeros((self.n, len(missing)))
            E[missing, np.arange(len(missing))] = 1.0
            Z = self.apply_P(E)
            for k, i in enumerate(missing):
                self._cols[i] = Z[:, k]
        return np.column_stack([self._cols[i] for i in idx]) if len(idx) else \
            np.zeros((self.n, 0))

    def active_set_step(self, active, sign, alpha):
        """Minimizer of the smooth model with u = 0 off ``active``: p_A = -alpha sign."""
        u = np.zeros(self.n)
        na = len(active)
        if na == 0:
            return u
        if na <= _DENSE_ACTIVE:
            C = self.columns(active)
            u[active] = np.linalg.solve(C[active], -alpha * sign - self.p0[active])
            return u
        n, K = self.n, self.K
        E = sp.csr_matrix((np.ones(na), (active, np.arange(na))), shape=(n, na))
        S = sp.bmat([[self.M, -K, None], [-K, None, E], [None, E.T, None]], format="csc")
        rhs = np.concatenate([self.b_d, np.zeros(n), -alpha * sign])
        u[active] = spla.splu(S, permc_spec="COLAMD").solve(rhs)[2 * n:]
        return u

    def free_hessian_solve(self, free, g_free):
        """Solve H_FF x = g_F for the dual Hessian H = K M^-1 K = P^-1."""
        bound = np.setdiff1d(np.arange(self.n), free)
        if len(bound) <= _DENSE_ACTIVE:
            # (H_FF)^-1 = P_FF - P_FB P_BB^-1 P_BF
            v = np.zeros(self.n)
            v[free] = g_free
            v = self.apply_P(v)
            if len(bound):
                C = self.columns(bound)
                v = v - C @ np.linalg.solve(C[bound], v[bound])
            return v[free]
        Kf = self.K[:, free]
        S = sp.bmat([[self.M, Kf], [Kf.T, None]], format="csc")
        rhs = np.concatenate([np.zeros(self.n), g_free])
        return -spla.splu(S, permc_spec="COLAMD").solve(rhs)[self.n:]


def semismooth_newton(problem, tol=1e-10, max_iter=100, u0=None, c=1.0, system=None,
                      accept_tol=None):
    """
    Solve the discrete optimality system by semismooth Newton.

    Each step fixes the active set A = {|u - c p| > c alpha} with signs
    sigma, sets u = 0 off A and solves p_A(u) = -alpha sigma_A. Small
    active sets use dense columns of K^-1 M K^-1, large ones the sparse
    saddle point system in (y, p, u_A).

    The plain iteration can cycle on fine meshes. If the residual fails
    to decrease for five consecutive steps, the solve switches to a
    globalized variant of the same Newton step: the projected Newton
    method on the dual problem

        min_q 1/2 (b_d - K q)^T M^-1 (b_d - K q)   s.t. |q_i| <= alpha,

    whose solution is q = -p and whose gradient is -u. An Armijo search
    along the projection arc makes every step decrease the dual cost;
    near the solution the bound set is fixed and full steps coincide with
    active set Newton steps.

    Parameters
    ----------
    problem : OcpProblem
    tol : float
        Target for :func:`optimality_residual`.
    max_iter : int
        Steps allowed in each of the two phases.
    u0 : array_like, optional
        Initial coefficients (warm start); zero by default.
    c : float
        Active set parameter of the plain iteration.
    system : tuple, optional
        Precomputed ``reduce(problem)``.
    accept_tol : float, optional
        On fine graded meshes the adjoint p(u) carries roundoff of order
        cond(K) * eps, which can leave the residual slightly above ``tol``.
        If the best iterate is within ``accept_tol`` it is returned with a
        warning instead of raising. The returned ``kkt_residual`` is always
        the attained value.

    Raises
    ------
    ConvergenceError
        If neither phase reaches ``tol`` (or ``accept_tol`` when given).
    """
    K, M, b_d = reduce(problem) if system is None else system
    alpha = problem.alpha
    R = _ReducedSystem(K, M, b_d)
    start = np.zeros(R.n) if u0 is None else np.array(u0, dtype=float)
    u, res, steps, ok = _ssn_plain(R, alpha, start, tol, max_iter, c)
    if not ok:
        log.info("active set iteration stalled at residual %.3e after %d steps, "
                 "switching to projected Newton on the dual", res, steps)
        # a warm start is usually a better dual guess than the stalled iterate
        q0 = -R.adjoint(u if u0 is None else start)
        u, res, more, ok = _dual_projected_newton(R, alpha, q0, tol, max_iter)
        steps += more
        if not ok and accept_tol is not None and res <= accept_tol:
            log.warning("residual %.3e above tol %.1e but within %.1e: accepted",
                        res, tol, accept_tol)
            ok = True
        if not ok:
            raise ConvergenceError(
                "semismooth Newton: residual {:.3e} above {:.1e} after {} steps".format(
                    res, tol, steps), u, res)
    return _package(problem, R.F, M, b_d, u, res, steps)


def _ssn_plain(R, alpha, u, tol, max_iter, c):
    """Active set Newton; returns (best u, residual, steps, converged)."""
    res, p = R.residual(u, alpha, c)
    best_u, best_res = u, res
    stall = 0
    it = 0
    while res > tol:
        if it >= max_iter or stall >= 5:
            return best_u, best_res, it, False
        it += 1
        w = u - c * p
        active = np.flatnonzero(np.abs(w) > c * alpha)
        u = R.active_set_step(active, np.sign(w[active]), alpha)
        res, p = R.residual(u, alpha, c)
        log.debug("ssn %d: |A| = %d, residual %.3e", it, active.size, res)
        if res < best_res:
            best_u, best_res, stall = u, res, 0
        else:
            stall += 1
    return u, res, it, True


def _dual_projected_newton(R, alpha, q, tol, max_iter, sigma=1e-4):
    """
    Projected Newton (two-metric, Armijo along the projection arc) for the
    box-constrained dual. Returns (u, residual, steps, converged) where u
    is the primal candidate read off the bound set.
    """
    K, M, b_d = R.K, R.M, R.b_d
    FM = R.FM
    q = np.clip(q, -alpha, alpha)
    # diagonal of K M_lumped^-1 K scales the steps on the near-bound set
    Kc = sp.csr_matrix(K)
    hdiag = np.asarray(Kc.multiply(Kc).multiply(1 / np.asarray(M.sum(axis=1)).ravel()[None, :])
                       .sum(axis=1)).ravel()
    D = 1.0 / hdiag
    best_u, best_res = None, np.inf
    for it in range(1, max_iter + 1):
        y = FM.solve(b_d - K @ q)
        g = -(K @ y)
        # primal candidate: -g on the bound set, zero elsewhere
        at_bound = np.abs(q) >= alpha
        u = np.where(at_bound, -g, 0.0)
        res, _ = R.residual(u, alpha)
        if res < best_res:
            best_u, best_res = u, res
        log.debug("dual pn %d: |bound| = %d, residual %.3e", it, at_bound.sum(), res)
        if res <= tol:
            return u, res, it, True
        w = np.abs(q - np.clip(q - D * g, -alpha, alpha)).max()
        eps = min(1e-3 * alpha, w)
        near = ((q >= alpha - eps) & (g < 0)) | ((q <= -alpha + eps) & (g > 0))
        free = np.flatnonzero(~near)
        d = np.where(near, -D * g, 0.0)
        if free.size:
            d[free] = -R.free_hessian_solve(free, g[free])
        slope_free = -(g[free] @ d[free])
        t = 1.0
        for _ in range(60):
            qt = np.clip(q + t * d, -alpha, alpha)
            delta = qt - q
            Kd = K @ delta
            decrease = -(g @ delta) - 0.5 * Kd @ FM.solve(Kd)
            wanted = sigma * (t * slope_free + g[near] @ (q[near] - qt[near]))
            if decrease >= wanted:
                break
            t *= 0.5
        else:
            return best_u, best_res, it, False
        if not np.any(delta):
            return best_u, best_res, it, False
        log.debug("dual pn %d: |near| = %d, step %.3g", it, near.sum(), t)
        q = qt
    return best_u, best_res, max_iter, False


def _package(problem, F, M, b_d, u, res, iterations):
    mesh = problem.mesh
    yc = F.solve(u)
    pc = F.solve(M @ yc - b_d)
    y = FeFunction.from_interior(mesh, yc)
    p = FeFunction.from_interior(mesh, pc)
    control = ControlMeasure(mesh, u)
    cost = 0.5 * error_l2(y, problem.y_d, problem.quad_degree) ** 2 \
        + problem.alpha * control.norm()
    return OcpSolution(y, p, control, res, iterations, cost)


def _lipschitz(F, M, n, iters=50, seed=0):
    """Power-method estimate of the largest eigenvalue of K^-1 M K^-1."""
    v = np.random.default_rng(seed).standard_normal(n)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = F.solve(M @ F.solve(v))
        lam = float(np.linalg.norm(w))
        if lam == 0:
            return 1.0
        v = w / lam
    return lam


def _fista(F, M, b_d, alpha, u0, tol, max_iter, check_every=10):
    """
    FISTA with backtracking and restarts.

    The momentum is reset when the step points against the last move
    (gradient restart) or when the cost goes up. Cost comparisons allow
    for roundoff of relative size 1e-14: near the minimizer the cost is
    flat to working precision and a strict test would freeze the iterate
    at an accuracy of about sqrt(eps).

    Returns ``(u, residual, iterations)``; the residual is the c = 1
    fixed-point residual, refreshed every ``check_every`` iterations.
    """
    n = len(b_d)
    u = np.zeros(n) if u0 is None else np.array(u0, dtype=float)
    L = 1.01 * _lipschitz(F, M, n)
    z = F.solve(u)                      # state of the current iterate
    cost = reduced_cost(M, b_d, z, u, alpha)
    u_prev, z_prev = u, z
    t = 1.0
    res = np.inf
    k = 0
    while k < max_iter:
        k += 1
        t_next = 0.5 * (1 + np.sqrt(1 + 4 * t * t))
        beta = (t - 1) / t_next
        v = u + beta * (u - u_prev)
        zv = z + beta * (z - z_prev)
        grad = F.solve(M @ zv - b_d)
        fv = 0.5 * zv @ (M @ zv) - b_d @ zv
        while True:
            u_new = soft_threshold(v - grad / L, alpha / L)
            z_new = F.solve(u_new)
            d = u_new - v
            f_new = 0.5 * z_new @ (M @ z_new) - b_d @ z_new
            if f_new <= fv + grad @ d + 0.5 * L * (d @ d) + 1e-14 * (abs(fv) + 1e-300):
                break
            L *= 2.0
        cost_new = f_new + alpha * np.abs(u_new).sum()
        slack = 1e-14 * max(abs(cost), abs(cost_new))
        if cost_new > cost + slack:
            t = 1.0
            u_prev, z_prev = u, z
            if beta != 0.0:
                continue
            # a plain proximal step cannot increase the cost in exact arithmetic
            break
        restart = (v - u_new) @ (u_new - u) > 0
        u_prev, z_prev = u, z
        u, z, cost = u_new, z_new, min(cost, cost_new)
        t = 1.0 if restart else t_next
        if tol > 0 and k % check_every == 0:
            p = F.solve(M @ z - b_d)
            res = float(np.abs(u - soft_threshold(u - p, alpha)).max())
            if res <= tol:
                return u, res, k
    if tol > 0:
        p = F.solve(M @ z - b_d)
        res = float(np.abs(u - soft_threshold(u - p, alpha)).max())
    return u, res, k


def fista_oracle(problem, tol=1e-12, max_iter=10 ** 6, u0=None, system=None):
    """
    Accelerated proximal gradient solution of the coefficient problem.

    Kept independent of :func:`semismooth_newton`; only the sparse solves
    are shared.

    Raises
    ------
    ConvergenceError
        If the fixed-point residual is still above ``tol`` after
        ``max_iter`` iterations.
    """
    K, M, b_d = reduce(problem) if system is None else system
    F = SPDFactor(K)
    u, res, it = _fista(F, M, b_d, problem.alpha, u0, tol, max_iter)
    if res > tol:
        raise ConvergenceError(
            "FISTA: residual {:.3e} above {:.1e} after {} iterations".format(
                res, tol, it), u, res)
    return ControlMeasure(problem.mesh, u)
