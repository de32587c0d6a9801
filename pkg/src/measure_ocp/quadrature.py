"""
Symmetric quadrature on triangles.

Rules live on the reference triangle with vertices (0,0), (1,0), (0,1) and
are stored in barycentric form, so mapping to a physical triangle is a
single matrix product with its vertex coordinates.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._quad_tables import TABLES

MAX_DEGREE = 19


@dataclass(frozen=True)
class QuadratureRule:
    """
    Quadrature rule on the reference triangle.

    Attributes
    ----------
    degree : int
        Total polynomial degree integrated exactly.
    points : numpy.ndarray
        Barycentric coordinates, shape (npts, 3).
    weights : numpy.ndarray
        Reference weights, shape (npts,), summing to 1/2.
    """
    degree: int
    points: np.ndarray
    weights: np.ndarray

    @property
    def num_points(self):
        return len(self.weights)

    @property
    def ref_points(self):
        """Cartesian coordinates (x, y) on the reference triangle."""
        return self.points[:, 1:]


@lru_cache(maxsize=None)
def rule(degree):
    """
    Return a positive-weight symmetric rule exact for degree ``degree``.

    Raises
    ------
    ValueError
        If ``degree`` is outside 1..19.
    """
    degree = int(degree)
    if degree < 1 or degree > MAX_DEGREE:
        raise ValueError(
            "unsupported quadrature degree {} (1..{})".format(degree, MAX_DEGREE))
    bary, weights = TABLES[degree]
    points = np.array(bary, dtype=float)
    points.setflags(write=False)
    weights = np.array(weights, dtype=float)
    weights.setflags(write=False)
    return QuadratureRule(degree, points, weights)


def map_points(vertices, qrule):
    """
    Map quadrature points to a batch of physical triangles.

    Parameters
    ----------
    vertices : array_like
        Triangle vertex coordinates, shape (ntri, 3, 2) or (3, 2).
    qrule : QuadratureRule

    Returns
    -------
    points : numpy.ndarray
        Shape (ntri, npts, 2) (or (npts, 2) for a single triangle).
    jac : numpy.ndarray
        Absolute Jacobian determinants 2*area, shape (ntri,) (or scalar).
    """
    vertices = np.asarray(vertices, dtype=float)
    points = np.einsum("qk,...kd->...qd", qrule.points, vertices)
    e1 = vertices[..., 1, :] - vertices[..., 0, :]
    e2 = vertices[..., 2, :] - vertices[..., 0, :]
    jac = np.abs(e1[..., 0] * e2[..., 1] - e1[..., 1] * e2[..., 0])
    return points, jac


def integrate(f, triangle, degree):
    """
    Integrate the scalar field ``f(x, y)`` over one physical triangle.

    ``f`` is called once with arrays of x and y coordinates.
    """
    qrule = rule(degree)
    points, jac = map_points(triangle, qrule)
    values = np.asarray(f(points[:, 0], points[:, 1]), dtype=float)
    values = np.broadcast_to(values, qrule.weights.shape)
    return float(jac * np.dot(qrule.weights, values))


def integrate_elements(f, vertices, degree):
    """
    Elementwise integrals of ``f(x, y)`` over a batch of triangles.

    Returns an array of shape (ntri,).
    """
    qrule = rule(degree)
    points, jac = map_points(vertices, qrule)
    values = np.asarray(f(points[..., 0], points[..., 1]), dtype=float)
    values = np.broadcast_to(values, points.shape[:-1])
    return jac * (values @ qrule.weights)
