"""
Command line driver for the benchmark experiments.

Example::

    measure-ocp run --example disk --refinement adaptive --max-ndof 100000 --out out
"""

import argparse
import logging
import os
import sys

from .afem import AfemConfig, AfemError, afem_loop, fit_rate
from .benchmarks import make_example
from .io import save_solution, solution_fields, write_records_csv, write_vtk
from .quadrature import MAX_DEGREE

__all__ = ["build_parser", "run_cli", "main"]

log = logging.getLogger(__name__)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {}".format(text))
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="measure-ocp",
        description="Adaptive FEM for sparse optimal control with measure-valued controls.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run one benchmark and write its convergence history")
    run.add_argument("--example", choices=["disk", "square", "lshape"], required=True)
    run.add_argument("--alpha", type=float, default=None,
                     help="sparsity parameter (default per example)")
    run.add_argument("--theta", type=float, default=0.5, help="marking fraction")
    run.add_argument("--refinement", choices=["adaptive", "uniform"], default="adaptive")
    run.add_argument("--max-iter", type=_positive_int, default=40)
    run.add_argument("--max-ndof", type=_positive_int, default=100_000)
    run.add_argument("--quad-degree", type=_positive_int, default=19)
    run.add_argument("--snap-boundary", choices=["on", "off"], default="on")
    run.add_argument("--out", default="out", help="output directory")
    run.add_argument("--vtk", action="store_true", help="write mesh_<i>.vtk per iteration")
    run.add_argument("-v", "--verbose", action="store_true")
    return parser


def _slopes(records, exact):
    names = ["est_total", "est_y", "est_p"]
    if exact:
        names += ["err_y_l2", "err_p_linf", "err_combined"]
    window = min(10, len(records))
    out = {}
    for name in names:
        try:
            out[name] = fit_rate(records, name, window)
        except ValueError:
            pass
    return out


def run_cli(args, parser=None):
    """Execute a parsed ``run`` command; returns the exit status."""
    parser = build_parser() if parser is None else parser
    if args.alpha is not None and not args.alpha > 0:
        parser.error("--alpha must be positive")
    if not 0 < args.theta <= 1:
        parser.error("--theta must lie in (0, 1]")
    if args.quad_degree > MAX_DEGREE:
        parser.error("--quad-degree must be at most {}".format(MAX_DEGREE))
    snap = args.snap_boundary == "on"
    try:
        problem, exact = make_example(args.example, args.alpha, snap=snap)
    except ValueError as exc:
        parser.error(str(exc))
    problem.quad_degree = args.quad_degree
    config = AfemConfig(theta=args.theta, max_iter=args.max_iter, max_ndof=args.max_ndof,
                        refinement=args.refinement, exact=exact, snap=snap)
    os.makedirs(args.out, exist_ok=True)

    def callback(record, prob, sol, est):
        print("iter {:3d}  ndof {:7d}  est {:.3e}  kkt {:.1e}  newton {:3d}".format(
            record.iteration, record.ndof, record.est_total, record.kkt_res,
            record.newton_iters), flush=True)
        if args.vtk:
            write_vtk(os.path.join(args.out, "mesh_{}.vtk".format(record.iteration)),
                      prob.mesh, solution_fields(sol))

    status = 0
    try:
        history = afem_loop(problem, config, callback)
    except AfemError as exc:
        print("error: {}".format(exc), file=sys.stderr)
        history = exc.history
        status = 1
    records_path = os.path.join(args.out, "records.csv")
    write_records_csv(history, records_path)
    if history.solution is not None:
        save_solution(os.path.join(args.out, "solution.npz"), history.solution)
    for name, slope in _slopes(history, exact is not None).items():
        print("slope {:<13s} {:+.3f}".format(name, slope))
    print("wrote {}".format(records_path))
    return status


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    return run_cli(args, parser)


if __name__ == "__main__":
    sys.exit(main())
