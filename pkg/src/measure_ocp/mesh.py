"""
Conforming triangulations and longest-edge bisection.

A :class:`Mesh` is immutable once built; :func:`refine` and
:func:`uniform_refine` return new meshes. Vertices of a parent mesh keep
their indices (and exact coordinates) in every refinement, new midpoints
are appended at the end.

Local edge ``k`` of a triangle is the edge opposite its local vertex ``k``.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import sparse as sp

__all__ = [
    "DomainSpec", "Mesh", "build_initial_mesh", "refine", "uniform_refine",
    "patches", "element_size", "element_sizes", "interior_nodes",
    "min_angles", "save_mesh", "load_mesh", "prolongate",
]

# Relative tolerance under which two edge lengths count as a tie.
_TIE_RTOL = 1e-12


@dataclass(frozen=True)
class DomainSpec:
    """
    One of the three benchmark domains.

    ``disk`` is the ball B_0(radius), ``square`` is (-1,1)^2 and ``lshape``
    is (-1,1)^2 minus [0,1)x(-1,0].
    """
    kind: str
    radius: float = 1.0
    n_boundary: int = 8

    def __post_init__(self):
        if self.kind not in ("disk", "square", "lshape"):
            raise ValueError("unknown domain kind {!r}".format(self.kind))
        if self.kind == "disk" and (self.radius <= 0 or self.n_boundary < 3):
            raise ValueError("disk needs radius > 0 and >= 3 boundary vertices")

    @property
    def area(self):
        if self.kind == "disk":
            return np.pi * self.radius ** 2
        return 4.0 if self.kind == "square" else 3.0

    def contains(self, x, y):
        """Closed-domain membership test, vectorized."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if self.kind == "disk":
            return x ** 2 + y ** 2 <= self.radius ** 2 * (1 + 1e-12)
        inside = (np.abs(x) <= 1) & (np.abs(y) <= 1)
        if self.kind == "lshape":
            inside &= ~((x > 0) & (y < 0))
        return inside

    def on_boundary(self, x, y, tol=1e-12):
        """Whether points lie on the boundary of the domain."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if self.kind == "disk":
            return np.abs(np.hypot(x, y) - self.radius) <= tol
        outer = (np.abs(np.abs(x) - 1) <= tol) | (np.abs(np.abs(y) - 1) <= tol)
        if self.kind == "square":
            return outer
        notch = ((np.abs(x) <= tol) & (y <= tol)) | ((np.abs(y) <= tol) & (x >= -tol))
        return (outer | notch) & self.contains(x, y)


class Mesh:
    """
    Conforming 2D triangulation.

    Parameters
    ----------
    vertices : array_like, shape (nvert, 2)
    triangles : array_like, shape (ntri, 3)
        Vertex indices. Clockwise triangles are reoriented.
    generation : array_like, optional
        Refinement depth of every triangle (zeros by default).
    circle_radius : float, optional
        When set, refinement projects new boundary vertices onto the circle
        of this radius centred at the origin.

    Raises
    ------
    ValueError
        For degenerate triangles or edges shared by more than two triangles.
    """

    def __init__(self, vertices, triangles, generation=None, circle_radius=None):
        vertices = np.array(vertices, dtype=float).reshape(-1, 2)
        triangles = np.array(triangles, dtype=np.int64).reshape(-1, 3)
        if triangles.size and (triangles.min() < 0 or triangles.max() >= len(vertices)):
            raise ValueError("triangle vertex index out of range")
        area2 = _signed_area2(vertices[triangles])
        flip = area2 < 0
        triangles[flip] = triangles[flip][:, [0, 2, 1]]
        area2 = np.abs(area2)
        scale = _edge_lengths(vertices[triangles]).max(axis=1) ** 2 if len(triangles) else 0
        if np.any(area2 <= 1e-14 * scale):
            raise ValueError("degenerate triangle in mesh")
        if generation is None:
            generation = np.zeros(len(triangles), dtype=np.int64)
        generation = np.array(generation, dtype=np.int64)

        self.vertices = vertices
        self.triangles = triangles
        self.generation = generation
        self.circle_radius = circle_radius
        self._build_topology()
        for arr in (self.vertices, self.triangles, self.generation, self.edges,
                    self.tri_edges, self.edge_tris, self.boundary_vertex):
            arr.setflags(write=False)

    def _build_topology(self):
        tri = self.triangles
        local = np.stack([tri[:, [1, 2]], tri[:, [2, 0]], tri[:, [0, 1]]], axis=1)
        pairs = np.sort(local.reshape(-1, 2), axis=1)
        edges, inverse, counts = np.unique(pairs, axis=0, return_inverse=True,
                                           return_counts=True)
        if np.any(counts > 2):
            raise ValueError("non-conforming mesh: edge shared by more than 2 triangles")
        inverse = inverse.reshape(-1)
        self.edges = edges
        self.tri_edges = inverse.reshape(-1, 3)
        owner = np.repeat(np.arange(len(tri)), 3)
        order = np.argsort(inverse, kind="stable")
        edge_tris = -np.ones((len(edges), 2), dtype=np.int64)
        sorted_edges = inverse[order]
        first = np.ones(len(order), dtype=bool)
        first[1:] = sorted_edges[1:] != sorted_edges[:-1]
        edge_tris[sorted_edges[first], 0] = owner[order][first]
        edge_tris[sorted_edges[~first], 1] = owner[order][~first]
        self.edge_tris = edge_tris
        boundary = np.zeros(len(self.vertices), dtype=bool)
        boundary[edges[edge_tris[:, 1] < 0].ravel()] = True
        self.boundary_vertex = boundary

    def __repr__(self):
        return "Mesh({} vertices, {} triangles, {} interior nodes)".format(
            self.num_vertices, self.num_triangles, self.num_interior)

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_triangles(self):
        return len(self.triangles)

    @property
    def num_interior(self):
        return int(np.count_nonzero(~self.boundary_vertex))

    @cached_property
    def interior_edges(self):
        """Indices into :attr:`edges` of edges shared by two triangles."""
        return np.flatnonzero(self.edge_tris[:, 1] >= 0)

    @cached_property
    def boundary_edges(self):
        return np.flatnonzero(self.edge_tris[:, 1] < 0)

    @cached_property
    def coords(self):
        """Vertex coordinates per triangle, shape (ntri, 3, 2)."""
        return self.vertices[self.triangles]

    @cached_property
    def areas(self):
        return 0.5 * _signed_area2(self.coords)

    @cached_property
    def edge_lengths(self):
        """Local edge lengths, shape (ntri, 3)."""
        return _edge_lengths(self.coords)

    @cached_property
    def h(self):
        """Element diameters h_T (longest edge)."""
        return self.edge_lengths.max(axis=1)

    @cached_property
    def longest_edge(self):
        """Local index of the refinement edge of every triangle.

        Near-ties are broken by the smallest global edge index.
        """
        lengths = self.edge_lengths
        cand = lengths >= lengths.max(axis=1, keepdims=True) * (1 - _TIE_RTOL)
        big = np.iinfo(np.int64).max
        return np.where(cand, self.tri_edges, big).argmin(axis=1)

    @cached_property
    def vertex_to_tri(self):
        """Sparse incidence, vertices x triangles."""
        ntri = self.num_triangles
        rows = self.triangles.ravel()
        cols = np.repeat(np.arange(ntri), 3)
        data = np.ones(3 * ntri, dtype=np.int8)
        return sp.csr_matrix((data, (rows, cols)), shape=(self.num_vertices, ntri))

    @cached_property
    def centroids(self):
        return self.coords.mean(axis=1)


def _signed_area2(coords):
    e1 = coords[..., 1, :] - coords[..., 0, :]
    e2 = coords[..., 2, :] - coords[..., 0, :]
    return e1[..., 0] * e2[..., 1] - e1[..., 1] * e2[..., 0]


def _edge_lengths(coords):
    # column k is the edge opposite local vertex k
    d0 = coords[..., 2, :] - coords[..., 1, :]
    d1 = coords[..., 0, :] - coords[..., 2, :]
    d2 = coords[..., 1, :] - coords[..., 0, :]
    return np.stack([np.hypot(d[..., 0], d[..., 1]) for d in (d0, d1, d2)], axis=-1)


def build_initial_mesh(spec):
    """
    Coarse starting mesh for a benchmark domain.

    The square is split by both diagonals (4 triangles, 1 interior node).
    Each unit square of the L-shape is split the same way (12 triangles,
    3 interior nodes). The disk is a regular inscribed polygon with
    ``spec.n_boundary`` vertices fanned from the centre.
    """
    if isinstance(spec, str):
        spec = DomainSpec(spec)
    if spec.kind == "square":
        vertices = [(-1, -1), (1, -1), (1, 1), (-1, 1), (0, 0)]
        triangles = [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4)]
        return Mesh(vertices, triangles)
    if spec.kind == "lshape":
        vertices = [(-1, -1), (0, -1), (-1, 0), (0, 0), (1, 0), (-1, 1), (0, 1),
                    (1, 1)]
        squares = [(0, 1, 3, 2), (2, 3, 6, 5), (3, 4, 7, 6)]
        triangles = []
        for a, b, c, d in squares:
            centre = len(vertices)
            vertices.append(tuple(np.mean([vertices[i] for i in (a, b, c, d)], axis=0)))
            triangles += [(a, b, centre), (b, c, centre), (c, d, centre), (d, a, centre)]
        return Mesh(vertices, triangles)
    n = spec.n_boundary
    theta = 2 * np.pi * np.arange(n) / n
    ring = spec.radius * np.column_stack([np.cos(theta), np.sin(theta)])
    vertices = np.vstack([[0.0, 0.0], ring])
    triangles = [(0, 1 + k, 1 + (k + 1) % n) for k in range(n)]
    return Mesh(vertices, triangles, circle_radius=spec.radius)


def refine(mesh, marked, snap=True):
    """
    Longest-edge bisection of the marked triangles with conforming closure.

    Every marked triangle is bisected through its longest edge. Any
    triangle that has a bisected edge also gets its own longest edge
    bisected, until the marked edge set is closed. Triangles are then cut
    through the longest edge and, if needed, once more through each other
    marked edge.

    Parameters
    ----------
    mesh : Mesh
    marked : array_like of int
        Triangle indices.
    snap : bool
        Project new boundary vertices onto the mesh's circle, if it has one.

    Raises
    ------
    ValueError
        If ``marked`` is empty or holds invalid indices.
    """
    marked = np.unique(np.asarray(marked, dtype=np.int64).ravel())
    if marked.size == 0:
        raise ValueError("refine: empty marked set, no progress possible")
    if marked[0] < 0 or marked[-1] >= mesh.num_triangles:
        raise ValueError("refine: triangle index out of range")
    rows = np.arange(mesh.num_triangles)
    refine_edge = mesh.tri_edges[rows, mesh.longest_edge]
    edge_flag = np.zeros(len(mesh.edges), dtype=bool)
    edge_flag[refine_edge[marked]] = True
    while True:
        touched = edge_flag[mesh.tri_edges].any(axis=1)
        pending = touched & ~edge_flag[refine_edge]
        if not pending.any():
            break
        edge_flag[refine_edge[pending]] = True
    return _split(mesh, edge_flag, snap)


def uniform_refine(mesh, snap=True):
    """Split every triangle into four by bisecting all edges."""
    return _split(mesh, np.ones(len(mesh.edges), dtype=bool), snap)


def _split(mesh, edge_flag, snap):
    nv = mesh.num_vertices
    split_edges = np.flatnonzero(edge_flag)
    midpoint_id = -np.ones(len(mesh.edges), dtype=np.int64)
    midpoint_id[split_edges] = nv + np.arange(len(split_edges))
    ends = mesh.edges[split_edges]
    new_xy = 0.5 * (mesh.vertices[ends[:, 0]] + mesh.vertices[ends[:, 1]])
    if snap and mesh.circle_radius is not None:
        on_bdry = mesh.edge_tris[split_edges, 1] < 0
        r = np.hypot(new_xy[on_bdry, 0], new_xy[on_bdry, 1])
        new_xy[on_bdry] *= (mesh.circle_radius / r)[:, None]
    vertices = np.vstack([mesh.vertices, new_xy])

    tri = mesh.triangles
    ntri = len(tri)
    rows = np.arange(ntri)
    lk = mesh.longest_edge
    A = tri[rows, lk]
    B = tri[rows, (lk + 1) % 3]
    C = tri[rows, (lk + 2) % 3]
    M = midpoint_id[mesh.tri_edges[rows, lk]]
    P = midpoint_id[mesh.tri_edges[rows, (lk + 2) % 3]]   # on AB
    Q = midpoint_id[mesh.tri_edges[rows, (lk + 1) % 3]]   # on CA
    cut = M >= 0
    if np.any(~cut & ((P >= 0) | (Q >= 0))):
        raise RuntimeError("closure failed: split edge on unsplit refinement edge")
    gen = mesh.generation

    keep = np.flatnonzero(~cut)
    pieces = [(keep, tri[keep], gen[keep])]
    ab = cut & (P >= 0)
    ab_plain = cut & (P < 0)
    ca = cut & (Q >= 0)
    ca_plain = cut & (Q < 0)
    for mask, children in (
            (ab, [(M, A, P), (M, P, B)]),
            (ab_plain, [(A, B, M)]),
            (ca, [(M, C, Q), (M, Q, A)]),
            (ca_plain, [(A, M, C)])):
        idx = np.flatnonzero(mask)
        depth = 2 if len(children) == 2 else 1
        for child in children:
            pieces.append((idx, np.column_stack([v[idx] for v in child]),
                           gen[idx] + depth))
    parent = np.concatenate([p[0] for p in pieces])
    new_tri = np.vstack([p[1] for p in pieces])
    new_gen = np.concatenate([p[2] for p in pieces])
    order = np.argsort(parent, kind="stable")
    fine = Mesh(vertices, new_tri[order], new_gen[order], mesh.circle_radius)
    # vertex nv + k is the midpoint of the parent edge parent_edges[k]
    fine.parent_vertices = nv
    fine.parent_edges = ends
    return fine


def prolongate(fine, values):
    """
    Carry a P1 field from the parent mesh to ``fine`` = refine(parent, ...).

    Parent vertices keep their values; each new vertex takes the mean of
    the endpoints of the edge it bisects, which is exact for P1 fields
    (up to boundary snapping, where homogeneous fields stay zero).
    """
    values = np.asarray(values, dtype=float)
    nv = getattr(fine, "parent_vertices", None)
    if nv is None or len(values) != nv:
        raise ValueError("values do not live on the parent of this mesh")
    ends = fine.parent_edges
    return np.concatenate([values, 0.5 * (values[ends[:, 0]] + values[ends[:, 1]])])


def patches(mesh, T):
    """
    Element patches of triangle ``T``.

    Returns
    -------
    vertex_patch : numpy.ndarray
        Triangles sharing at least one vertex with ``T``.
    edge_patch : numpy.ndarray
        ``T`` together with the triangles sharing an interior edge with it.
    """
    T = int(T)
    v2t = mesh.vertex_to_tri
    vertex_patch = np.unique(np.concatenate(
        [v2t.indices[v2t.indptr[v]:v2t.indptr[v + 1]] for v in mesh.triangles[T]]))
    nbrs = mesh.edge_tris[mesh.tri_edges[T]].ravel()
    edge_patch = np.unique(np.append(nbrs[nbrs >= 0], T))
    return vertex_patch, edge_patch


def element_size(mesh, T):
    """Diameter h_T of triangle ``T`` (its longest edge)."""
    return float(mesh.h[T])


def element_sizes(mesh):
    return mesh.h


def interior_nodes(mesh):
    """Indices of the vertices not on the boundary, in increasing order."""
    return np.flatnonzero(~mesh.boundary_vertex)


def min_angles(mesh):
    """Smallest interior angle (radians) of every triangle."""
    L = mesh.edge_lengths
    a, b, c = L[:, 0], L[:, 1], L[:, 2]
    cos = np.stack([(b**2 + c**2 - a**2) / (2 * b * c),
                    (a**2 + c**2 - b**2) / (2 * a * c),
                    (a**2 + b**2 - c**2) / (2 * a * b)], axis=1)
    return np.arccos(np.clip(cos, -1, 1)).min(axis=1)


def save_mesh(mesh, path):
    """
    Write the plain-text mesh format.

    Header ``ntri nvert``, then one ``x y boundary_flag`` line per vertex,
    then one ``i j k`` line per triangle.
    """
    with open(path, "w") as fh:
        fh.write("{} {}\n".format(mesh.num_triangles, mesh.num_vertices))
        for (x, y), b in zip(mesh.vertices, mesh.boundary_vertex):
            fh.write("{!r} {!r} {}\n".format(float(x), float(y), int(b)))
        for i, j, k in mesh.triangles:
            fh.write("{} {} {}\n".format(i, j, k))


def load_mesh(path, circle_radius=None):
    """Read a mesh written by :func:`save_mesh`."""
    with open(path) as fh:
        ntri, nvert = (int(tok) for tok in fh.readline().split())
        vertex_rows = [fh.readline().split() for _ in range(nvert)]
        tri_rows = [fh.readline().split() for _ in range(ntri)]
    vertices = np.array([[float(r[0]), float(r[1])] for r in vertex_rows])
    flags = np.array([int(r[2]) for r in vertex_rows], dtype=bool)
    mesh = Mesh(vertices, np.array(tri_rows, dtype=np.int64),
                circle_radius=circle_radius)
    if not np.array_equal(flags, mesh.boundary_vertex):
        raise ValueError("boundary flags in file disagree with mesh topology")
    return mesh
