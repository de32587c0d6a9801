"""
Adaptive finite elements for sparse elliptic optimal control in measure space.

The control is a measure, discretized as Dirac masses at the interior mesh
nodes. The package provides meshes with longest-edge bisection, P1
assembly, a semismooth Newton solver for the discrete optimality system,
residual error indicators, the adaptive loop and three benchmark problems.
"""

from .afem import AfemConfig, ConvergenceRecord, afem_loop, fit_rate, mark
from .benchmarks import example_disk, example_lshape, example_square, make_example
from .estimators import estimate
from .fem import ControlMeasure, FeFunction
from .mesh import DomainSpec, Mesh, build_initial_mesh, refine, uniform_refine
from .ocp import OcpProblem, OcpSolution, fista_oracle, semismooth_newton

__version__ = "0.1.0"

__all__ = [
    "AfemConfig", "ConvergenceRecord", "afem_loop", "fit_rate", "mark",
    "example_disk", "example_lshape", "example_square", "make_example", "estimate",
    "ControlMeasure", "FeFunction", "DomainSpec", "Mesh", "build_initial_mesh",
    "refine", "uniform_refine", "OcpProblem", "OcpSolution", "fista_oracle",
    "semismooth_newton",
]
