"""Command line interface: ``minimax-appd {compute,bench,verify}``.

Exit status: 0 success, 1 invalid input, 2 verification mismatch, 3 bad usage.
"""

import argparse
import logging
import sys

from . import __version__, algo4, baselines, verify
from ._validation import InvalidGraphError
from .bench import BenchConfig, ChecksumMismatch, format_fits, run_benchmark
from .graph import format_matrix_csv, load_graph

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 3

INTERFACE_VERSION = "1.0"

PROBLEMS = ("minimax", "widest")
ALGOS = ("algo4", "floyd", "mst-path")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _algo_list(text):
    names = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in names if x not in ALGOS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"unknown algorithm(s) {bad or text!r}; choose from {', '.join(ALGOS)}"
        )
    return names


def build_parser():
    parser = _Parser(
        prog="minimax-appd",
        description="All-pairs minimax / widest path distances on dense undirected graphs.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__} (interface {INTERFACE_VERSION})",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("compute", help="compute one distance matrix")
    p.add_argument("--input", required=True, help="CSV input file")
    p.add_argument("--format", choices=("points", "matrix"), default="matrix")
    p.add_argument("--problem", choices=PROBLEMS, default="minimax")
    p.add_argument("--algo", choices=ALGOS, default="algo4")
    p.add_argument("--output", default="-", help="matrix CSV destination (default: stdout)")
    p.add_argument("--parallel", action="store_true", help="threaded fill (algo4 only)")
    p.add_argument("--jobs", type=int, default=None, help="threads for --parallel")
    p.set_defaults(handler=cmd_compute, subparser=p)

    p = sub.add_parser("bench", help="time algorithms on growing random point sets")
    p.add_argument("--sizes", type=_int_list, default=[500, 1000, 2000, 4000, 8000, 10000])
    p.add_argument("--algos", type=_algo_list, default=list(ALGOS))
    p.add_argument("--problem", choices=PROBLEMS, default="minimax")
    p.add_argument("--dim", type=int, default=2, help="point dimension")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout", type=float, default=7200.0, help="seconds per run")
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--report", default="bench_report.csv")
    p.add_argument("--summary", default="bench_summary.csv")
    p.set_defaults(handler=cmd_bench, subparser=p)

    p = sub.add_parser("verify", help="cross-check all algorithms on random graphs")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--seeds", type=int, default=50)
    p.add_argument("--problem", choices=PROBLEMS, default="minimax")
    p.set_defaults(handler=cmd_verify, subparser=p)
    return parser


def _algorithm(name):
    return {
        "algo4": algo4.appd_algo4,
        "floyd": baselines.appd_floyd,
        "mst-path": baselines.appd_mst_path,
    }[name]


def cmd_compute(args, parser):
    if args.parallel and args.algo != "algo4":
        parser.error("--parallel is only available with --algo algo4")
    try:
        graph = load_graph(args.input, args.format)
    except (InvalidGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    kwargs = {"parallel": True, "n_jobs": args.jobs} if args.parallel else {}
    dist = _algorithm(args.algo)(graph, args.problem, **kwargs)
    text = format_matrix_csv(dist.values)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_bench(args, parser):
    try:
        config = BenchConfig(
            sizes=args.sizes,
            dimension=args.dim,
            seed=args.seed,
            algorithms=args.algos,
            problem=args.problem,
            timeout_seconds=args.timeout,
            repetitions=args.repetitions,
        )
    except ValueError as exc:
        parser.error(str(exc))
    try:
        report = run_benchmark(config)
    except ChecksumMismatch as exc:
        print(f"checksum mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    report.write_csv(args.report)
    report.write_summary_csv(args.summary)
    fits = report.scaling_fits()
    print(format_fits(fits))
    missing = [a for a in config.algorithms if a not in {f.algorithm for f in fits}]
    if missing:
        print(
            f"no exponent for {', '.join(missing)}: fewer than 3 completed sizes",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_verify(args, parser):
    if args.n_max < 2:
        parser.error("--n-max must be >= 2")
    if args.seeds < 0:
        parser.error("--seeds must be >= 0")
    checked, failure = verify.run_verification(args.n_max, args.seeds, args.problem)
    if failure is not None:
        print(f"MISMATCH {failure}", file=sys.stderr)
        print("counterexample weight matrix:", file=sys.stderr)
        sys.stderr.write(format_matrix_csv(failure.graph.weights))
        return EXIT_MISMATCH
    print(f"ok: {checked} graphs, n <= {args.n_max}, {args.problem}")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return args.handler(args, args.subparser)


if __name__ == "__main__":
    sys.exit(main())
