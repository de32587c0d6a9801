"""
The three benchmark problems and the exact solution of the disk example.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .mesh import DomainSpec, build_initial_mesh
from .ocp import OcpProblem

__all__ = [
    "ExactSolution", "example_disk", "example_square", "example_lshape",
    "combined_error", "SQUARE_ALPHAS", "make_example",
]

SQUARE_ALPHAS = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
LSHAPE_ALPHA = 5e-3
DISK_ALPHA = 1e-2


@dataclass(frozen=True)
class ExactSolution:
    """Closed-form optimal state, adjoint and control (a single Dirac mass)."""
    state: object
    adjoint: object
    control_location: tuple
    control_mass: float


def _radius(x, y):
    return np.hypot(x, y)


def disk_state(x, y):
    """Green's function -ln|x| / (2 pi) of the unit disk."""
    return -np.log(_radius(x, y)) / (2 * np.pi)


def disk_adjoint(x, y, alpha=DISK_ALPHA):
    r = _radius(x, y)
    return alpha * (-2 * r ** 3 + 3 * r ** 2 - 1)


def disk_desired_state(x, y, alpha=DISK_ALPHA):
    # Laplacian of the adjoint plus the state, written without the 1/r factor
    r = _radius(x, y)
    return -alpha * 6 * (3 * r - 2) - np.log(r) / (2 * np.pi)


def example_disk(n_boundary=8, snap=True):
    """
    Unit disk, alpha = 1e-2, optimal control delta_0.

    The adjoint ``alpha (-2 r^3 + 3 r^2 - 1)`` equals -0.02 r^3 + 0.03 r^2
    - 0.01 for alpha = 1e-2.
    """
    mesh = build_initial_mesh(DomainSpec("disk", 1.0, n_boundary))
    if not snap:
        mesh = type(mesh)(mesh.vertices, mesh.triangles)
    problem = OcpProblem(mesh, DISK_ALPHA, disk_desired_state)
    exact = ExactSolution(disk_state, disk_adjoint, (0.0, 0.0), 1.0)
    return problem, exact


def square_desired_state(x, y):
    return 10 * (np.exp(-50 * ((x - 0.2) ** 2 + (y + 0.1) ** 2))
                 - np.exp(-50 * ((x + 0.1) ** 2 + (y - 0.2) ** 2)))


def example_square(alpha=1e-4):
    """Square (-1,1)^2 with two Gaussian bumps of opposite sign as target."""
    if not alpha > 0:
        raise ValueError("alpha must be positive, got {}".format(alpha))
    if not any(np.isclose(alpha, a, rtol=1e-9, atol=0) for a in SQUARE_ALPHAS):
        warnings.warn("alpha = {} is outside the benchmark sweep".format(alpha))
    return OcpProblem(build_initial_mesh(DomainSpec("square")), alpha,
                      square_desired_state)


def lshape_desired_state(x, y):
    # singular at (0.2, -0.2), which is outside the L-shaped domain
    return -np.log(np.hypot(x - 0.2, y + 0.2))


def example_lshape(alpha=LSHAPE_ALPHA):
    """L-shaped domain (-1,1)^2 minus [0,1)x(-1,0], alpha = 5e-3."""
    return OcpProblem(build_initial_mesh(DomainSpec("lshape")), alpha,
                      lshape_desired_state)


def make_example(name, alpha=None, snap=True):
    """Problem (and exact solution or None) for a benchmark by name."""
    if name == "disk":
        problem, exact = example_disk(snap=snap)
        if alpha is not None and alpha != DISK_ALPHA:
            raise ValueError("the disk example has a fixed alpha = 1e-2")
        return problem, exact
    if name == "square":
        return example_square(1e-4 if alpha is None else alpha), None
    if name == "lshape":
        return example_lshape(LSHAPE_ALPHA if alpha is None else alpha), None
    raise ValueError("unknown example {!r}".format(name))


def combined_error(e_y_l2, e_p_linf):
    """(|e_y|_{L2}^2 + |e_p|_{Linf}^2)^{1/2}."""
    if e_y_l2 < 0 or e_p_linf < 0:
        raise ValueError("error norms must be nonnegative")
    return float(np.hypot(e_y_l2, e_p_linf))
