"""
Residual a posteriori error indicators for the discrete control problem.

In two dimensions the element indicators are::

    E_y^2(T) = h_T^3 * sum_{S interior edge of T} |S| J_S(y)^2
    E_p(T)   = h_T |y - y_d|_{L2(T)} + h_T * max_{S interior edge of T} |J_S(p)|

where J_S(v) is the jump of the normal derivative of the P1 field v across
S. The state part is summed in l2, the adjoint part in l-infinity, and
elements are marked with E_y^2(T) + E_p(T)^2.
"""

from dataclasses import dataclass

import numpy as np

from .fem import error_l2, p1_gradients
from .quadrature import map_points, rule

__all__ = [
    "IndicatorField", "Estimate", "edge_normals", "edge_jumps", "jump_gradient",
    "indicator_state", "indicator_adjoint", "indicator_total",
    "estimator_state_global", "estimator_adjoint_global", "estimator_total_global",
    "oscillation", "log_factor", "estimate",
]

KINDS = ("state_sq", "adjoint", "total_sq")


@dataclass
class IndicatorField:
    """Nonnegative per-element values with a tag saying what they measure."""
    values: np.ndarray
    kind: str

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.kind not in KINDS:
            raise ValueError("unknown indicator kind {!r}".format(self.kind))
        if self.values.ndim != 1:
            raise ValueError("indicator values must be one-dimensional")
        if np.any(self.values < 0) or not np.all(np.isfinite(self.values)):
            raise ValueError("indicator values must be finite and nonnegative")

    def __len__(self):
        return len(self.values)


def _edge_geometry(mesh):
    X = mesh.vertices[mesh.edges]
    d = X[:, 1] - X[:, 0]
    length = np.hypot(d[:, 0], d[:, 1])
    normal = np.column_stack([d[:, 1], -d[:, 0]]) / length[:, None]
    # orient towards the first neighbour T+ = edge_tris[:, 0]
    towards = mesh.centroids[mesh.edge_tris[:, 0]] - X.mean(axis=1)
    flip = np.einsum("ed,ed->e", normal, towards) < 0
    normal[flip] *= -1
    return normal, length


def edge_normals(mesh):
    """Unit normal of every edge pointing into ``edge_tris[:, 0]``, and edge lengths."""
    return _edge_geometry(mesh)


def edge_jumps(v):
    """
    Normal-derivative jumps of a P1 field on every edge.

    The jump on the interior edge S shared by T+ = edge_tris[S, 0] and
    T- = edge_tris[S, 1] is nu+ . (grad v|T+ - grad v|T-), where nu+ points
    into T+. It does not depend on which neighbour is called T+. Boundary
    edges get 0.
    """
    mesh = v.mesh
    normal, _ = _edge_geometry(mesh)
    grads = v.gradients()
    jumps = np.zeros(len(mesh.edges))
    inner = mesh.interior_edges
    plus, minus = mesh.edge_tris[inner, 0], mesh.edge_tris[inner, 1]
    jumps[inner] = np.einsum("ed,ed->e", normal[inner], grads[plus] - grads[minus])
    return jumps


def jump_gradient(mesh, v, S):
    """
    Jump of the normal derivative of ``v`` across the interior edge ``S``.

    Raises
    ------
    ValueError
        If ``S`` is a boundary edge.
    """
    S = int(S)
    if mesh.edge_tris[S, 1] < 0:
        raise ValueError("edge {} lies on the boundary".format(S))
    if v.mesh is not mesh:
        raise ValueError("field lives on a different mesh")
    t0, t1 = mesh.edge_tris[S]
    normal, _ = _edge_geometry(mesh)
    G = np.einsum("tk,tkd->td", v.values[mesh.triangles[[t0, t1]]],
                  p1_gradients(mesh)[[t0, t1]])
    return float(normal[S] @ (G[0] - G[1]))


def _select(values, T, kind):
    if T is None:
        return IndicatorField(values, kind)
    return float(values[int(T)])


def indicator_state(mesh, y, T=None):
    """
    State indicators E_y^2(T) = h_T^3 sum_S |S| J_S(y)^2.

    Returns an :class:`IndicatorField` of kind ``state_sq``, or the value on
    one element if ``T`` is given.
    """
    _, length = _edge_geometry(mesh)
    jumps = edge_jumps(y)
    per_edge = jumps ** 2 * length
    values = mesh.h ** 3 * per_edge[mesh.tri_edges].sum(axis=1)
    return _select(values, T, "state_sq")


def indicator_adjoint(mesh, p, y, y_d, T=None, degree=19):
    """
    Adjoint indicators E_p(T) = h_T |y - y_d|_{L2(T)} + h_T max_S |J_S(p)|.

    Returns an :class:`IndicatorField` of kind ``adjoint``, or the value on
    one element if ``T`` is given.
    """
    misfit = np.sqrt(error_l2(y, y_d, degree, elementwise=True))
    jumps = np.abs(edge_jumps(p))
    values = mesh.h * misfit + mesh.h * jumps[mesh.tri_edges].max(axis=1)
    return _select(values, T, "adjoint")


def indicator_total(state_sq, adjoint):
    """Marking indicators E_y^2(T) + E_p(T)^2."""
    _expect(state_sq, "state_sq")
    _expect(adjoint, "adjoint")
    if len(state_sq) != len(adjoint):
        raise ValueError("indicator fields have different lengths")
    return IndicatorField(state_sq.values + adjoint.values ** 2, "total_sq")


def _expect(field, kind):
    if not isinstance(field, IndicatorField) or field.kind != kind:
        raise ValueError("expected an IndicatorField of kind {!r}".format(kind))


def estimator_state_global(field):
    """E_y = (sum_T E_y^2(T))^{1/2}."""
    _expect(field, "state_sq")
    return float(np.sqrt(field.values.sum()))


def estimator_adjoint_global(field):
    """E_p = max_T E_p(T)."""
    _expect(field, "adjoint")
    if len(field) == 0:
        raise ValueError("empty indicator field")
    return float(field.values.max())


def estimator_total_global(state_sq, adjoint):
    """E_ocp = (E_y^2 + E_p^2)^{1/2}."""
    return float(np.hypot(estimator_state_global(state_sq),
                          estimator_adjoint_global(adjoint)))


def oscillation(mesh, g, elements=None, degree=19):
    """
    Data oscillation (sum_{T in elements} h_T^2 |g - Pi g|^2_{L2(T)})^{1/2}.

    Pi is the elementwise L2 projection onto linear polynomials. All
    elements are used when ``elements`` is None.
    """
    idx = np.arange(mesh.num_triangles) if elements is None else \
        np.unique(np.asarray(elements, dtype=np.int64))
    if idx.size == 0:
        return 0.0
    qrule = rule(degree)
    points, jac = map_points(mesh.coords[idx], qrule)
    gv = np.broadcast_to(np.asarray(g(points[..., 0], points[..., 1]), dtype=float),
                         points.shape[:-1])
    w = qrule.weights
    lam = qrule.points
    # the local mass matrix is jac * ref, with ref = (1 + I) / 24
    ref = (np.ones((3, 3)) + np.eye(3)) / 24.0
    load = (gv * w) @ lam
    coeff = np.linalg.solve(ref, load.T).T
    resid = gv - coeff @ lam.T
    local = jac * ((resid ** 2) @ w)
    return float(np.sqrt((mesh.h[idx] ** 2 * local).sum()))


def log_factor(mesh):
    """l_T = |log(max_T 1 / h_T)|."""
    return float(abs(np.log(1.0 / mesh.h.min())))


@dataclass
class Estimate:
    state_sq: IndicatorField
    adjoint: IndicatorField
    total_sq: IndicatorField
    est_y: float
    est_p: float
    est_total: float
    ell: float


def estimate(problem, solution, degree=None):
    """All indicators and global estimators for a computed solution."""
    mesh = problem.mesh
    degree = problem.quad_degree if degree is None else degree
    ey = indicator_state(mesh, solution.y)
    ep = indicator_adjoint(mesh, solution.p, solution.y, problem.y_d, degree=degree)
    total = indicator_total(ey, ep)
    est_y = estimator_state_global(ey)
    est_p = estimator_adjoint_global(ep)
    return Estimate(ey, ep, total, est_y, est_p, float(np.hypot(est_y, est_p)),
                    log_factor(mesh))
