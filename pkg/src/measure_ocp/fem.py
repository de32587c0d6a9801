"""
Piecewise linear finite elements on a :class:`~measure_ocp.mesh.Mesh`.

Scalar fields are callables ``f(x, y)`` acting elementwise on arrays.
Assembled operators are restricted to interior nodes by default, which
imposes the homogeneous Dirichlet condition by elimination.
"""

from dataclasses import dataclass

import numpy as np
from scipy import sparse as sp

from .linalg import _csr
from .mesh import interior_nodes
from .quadrature import map_points, rule

__all__ = [
    "FeFunction", "ControlMeasure", "p1_gradients", "local_stiffness",
    "local_mass", "assemble_stiffness", "assemble_mass", "assemble_load_l2",
    "dirac_load", "locate", "evaluate", "error_l2", "error_linf",
]


@dataclass
class FeFunction:
    """Continuous P1 field given by its values at all mesh vertices."""
    mesh: object
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.mesh.num_vertices,):
            raise ValueError("need one value per vertex")

    @classmethod
    def from_interior(cls, mesh, coefficients):
        """Embed interior-node coefficients, with zero boundary values."""
        values = np.zeros(mesh.num_vertices)
        values[interior_nodes(mesh)] = coefficients
        return cls(mesh, values)

    @classmethod
    def interpolate(cls, mesh, f):
        return cls(mesh, f(mesh.vertices[:, 0], mesh.vertices[:, 1]))

    @property
    def interior_values(self):
        return self.values[interior_nodes(self.mesh)]

    def gradients(self):
        """Constant gradient on every triangle, shape (ntri, 2)."""
        G = p1_gradients(self.mesh)
        return np.einsum("tk,tkd->td", self.values[self.mesh.triangles], G)

    def __call__(self, points):
        return evaluate(self, points)


@dataclass
class ControlMeasure:
    """
    Linear combination of Dirac masses sitting at the interior nodes.

    ``coefficients[i]`` is the mass at ``interior_nodes(mesh)[i]``.
    """
    mesh: object
    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=float)
        if self.coefficients.shape != (self.mesh.num_interior,):
            raise ValueError("need one coefficient per interior node")
        if not np.all(np.isfinite(self.coefficients)):
            raise ValueError("control coefficients must be finite")

    @property
    def nodes(self):
        return interior_nodes(self.mesh)

    @property
    def points(self):
        return self.mesh.vertices[self.nodes]

    def norm(self):
        """Total variation of the measure, i.e. the l1 norm of the masses."""
        return float(np.abs(self.coefficients).sum())

    def nodal_field(self):
        """Vertex array holding u_i at control nodes and zero elsewhere."""
        values = np.zeros(self.mesh.num_vertices)
        values[self.nodes] = self.coefficients
        return values


def p1_gradients(mesh):
    """Gradients of the three barycentric basis functions, (ntri, 3, 2)."""
    X = mesh.coords
    # rows are edge vectors opposite each vertex, rotated by -90 degrees
    e = X[:, [2, 0, 1], :] - X[:, [1, 2, 0], :]
    area2 = 2 * mesh.areas
    return np.stack([-e[..., 1], e[..., 0]], axis=-1) / area2[:, None, None]


def local_stiffness(coords):
    """Element stiffness matrix of one triangle with vertex rows ``coords``."""
    coords = np.asarray(coords, dtype=float)
    e1, e2 = coords[1] - coords[0], coords[2] - coords[0]
    area = 0.5 * (e1[0] * e2[1] - e1[1] * e2[0])
    if area <= 0:
        raise ValueError("degenerate or clockwise triangle")
    e = coords[[2, 0, 1]] - coords[[1, 2, 0]]
    grads = np.column_stack([-e[:, 1], e[:, 0]]) / (2 * area)
    return area * grads @ grads.T


def local_mass(coords):
    coords = np.asarray(coords, dtype=float)
    e1, e2 = coords[1] - coords[0], coords[2] - coords[0]
    area = 0.5 * (e1[0] * e2[1] - e1[1] * e2[0])
    if area <= 0:
        raise ValueError("degenerate or clockwise triangle")
    return area / 12.0 * (np.ones((3, 3)) + np.eye(3))


def _assemble(mesh, local, restrict):
    tri = mesh.triangles
    rows = np.repeat(tri, 3, axis=1).ravel()
    cols = np.tile(tri, (1, 3)).ravel()
    A = _csr(mesh.num_vertices, rows, cols, local.ravel())
    if restrict:
        idx = interior_nodes(mesh)
        A = A[idx][:, idx]
        A.sort_indices()
    return A


def assemble_stiffness(mesh, restrict=True):
    """
    Global stiffness matrix K_ij = (grad phi_i, grad phi_j).

    With ``restrict`` (default) only interior rows and columns are kept.
    """
    if np.any(mesh.areas <= 0):
        raise ValueError("degenerate triangle")
    G = p1_gradients(mesh)
    local = mesh.areas[:, None, None] * np.einsum("tid,tjd->tij", G, G)
    return _assemble(mesh, local, restrict)


def assemble_mass(mesh, restrict=True):
    """Global mass matrix M_ij = (phi_i, phi_j)."""
    if np.any(mesh.areas <= 0):
        raise ValueError("degenerate triangle")
    ref = (np.ones((3, 3)) + np.eye(3)) / 12.0
    local = mesh.areas[:, None, None] * ref[None]
    return _assemble(mesh, local, restrict)


def assemble_load_l2(mesh, f, degree=6, restrict=True):
    """Load vector b_j = (f, phi_j) by quadrature of the given degree."""
    qrule = rule(degree)
    points, jac = map_points(mesh.coords, qrule)
    fvals = np.broadcast_to(np.asarray(f(points[..., 0], points[..., 1]), dtype=float),
                            points.shape[:-1])
    # barycentric coordinates are the basis values at the quadrature points
    local = jac[:, None] * ((fvals * qrule.weights) @ qrule.points)
    b = np.bincount(mesh.triangles.ravel(), weights=local.ravel(),
                    minlength=mesh.num_vertices)
    return b[interior_nodes(mesh)] if restrict else b


def dirac_load(mesh, u, restrict=True):
    """
    Load vector <u, phi_j> of a nodal Dirac measure.

    phi_j(x_i) is the Kronecker delta, so each mass lands on its own node.
    """
    coefficients = u.coefficients if isinstance(u, ControlMeasure) else np.asarray(u)
    b = np.zeros(mesh.num_vertices)
    np.add.at(b, interior_nodes(mesh), coefficients)
    return b[interior_nodes(mesh)] if restrict else b


def _barycentric(mesh, tris, points):
    X = mesh.coords[tris]
    T = np.stack([X[:, 1] - X[:, 0], X[:, 2] - X[:, 0]], axis=-1)
    rhs = points - X[:, 0]
    lam12 = np.linalg.solve(T, rhs[..., None])[..., 0]
    return np.column_stack([1 - lam12.sum(axis=1), lam12])


def locate(mesh, points, tol=1e-12, start=None):
    """
    Index of a triangle containing each point.

    A walk through neighbouring triangles is tried first (from ``start``,
    default triangle 0); points the walk cannot place are located by a
    brute-force scan.

    Raises
    ------
    ValueError
        If a point lies outside the mesh.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    found = np.array([_walk(mesh, p, 0 if start is None else start, tol) for p in points])
    for i in np.flatnonzero(found < 0):
        found[i] = _scan(mesh, points[i], tol)
    return found


def _walk(mesh, p, t, tol, max_steps=None):
    max_steps = 4 * int(np.sqrt(mesh.num_triangles)) + 50 if max_steps is None else max_steps
    for _ in range(max_steps):
        lam = _barycentric(mesh, np.array([t]), p[None])[0]
        k = int(np.argmin(lam))
        if lam[k] >= -tol:
            return t
        # step across the edge opposite the most negative coordinate
        pair = mesh.edge_tris[mesh.tri_edges[t, k]]
        nxt = pair[1] if pair[0] == t else pair[0]
        if nxt < 0:
            return -1
        t = int(nxt)
    return -1


def _scan(mesh, p, tol):
    lam = _barycentric(mesh, np.arange(mesh.num_triangles),
                       np.broadcast_to(p, (mesh.num_triangles, 2)))
    inside = np.flatnonzero(lam.min(axis=1) >= -tol)
    if inside.size == 0:
        raise ValueError("point {} lies outside the mesh".format(tuple(p)))
    return int(inside[0])


def evaluate(v, points):
    """Evaluate the P1 field ``v`` at one point or an array of points."""
    single = np.ndim(points) == 1
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    tris = locate(v.mesh, pts)
    lam = _barycentric(v.mesh, tris, pts)
    out = np.einsum("pk,pk->p", lam, v.values[v.mesh.triangles[tris]])
    return float(out[0]) if single else out


def field_at_quadrature(v, qrule):
    """Values of the P1 field at every element's quadrature points."""
    return v.values[v.mesh.triangles] @ qrule.points.T


def error_l2(v, exact, degree=19, elementwise=False):
    """
    L2 distance between the P1 field ``v`` and a scalar field.

    With ``elementwise`` the squared element contributions are returned.
    """
    qrule = rule(degree)
    points, jac = map_points(v.mesh.coords, qrule)
    diff = field_at_quadrature(v, qrule) - exact(points[..., 0], points[..., 1])
    local = jac * ((diff ** 2) @ qrule.weights)
    return local if elementwise else float(np.sqrt(local.sum()))


def error_linf(v, exact, degree=19, edge_points=9):
    """
    Max of |v - exact| over the quadrature points, the vertices and
    ``edge_points`` equispaced interior points of every edge.

    The edge samples catch maxima on element boundaries, where the
    interpolation error of smooth fields often peaks and which interior
    quadrature points never reach.
    """
    qrule = rule(degree)
    points, _ = map_points(v.mesh.coords, qrule)
    diff = field_at_quadrature(v, qrule) - exact(points[..., 0], points[..., 1])
    X = v.mesh.vertices
    at_vertices = v.values - exact(X[:, 0], X[:, 1])
    worst = max(np.abs(diff).max(), np.abs(at_vertices).max())
    if edge_points > 0:
        t = np.arange(1, edge_points + 1) / (edge_points + 1.0)
        a, b = v.mesh.edges[:, 0], v.mesh.edges[:, 1]
        P = X[a][:, None, :] * (1 - t)[None, :, None] + X[b][:, None, :] * t[None, :, None]
        vals = v.values[a][:, None] * (1 - t) + v.values[b][:, None] * t
        worst = max(worst, np.abs(vals - exact(P[..., 0], P[..., 1])).max())
    return float(worst)
