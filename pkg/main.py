import argparse
import sys
from typing import List, Optional

from graph_core.errors import GraphError
from utils.main_utils import EXIT_USAGE, exit_code_for, initialize_logger, run_command
from utils.settings import load_settings


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _add_match_flags(parser: argparse.ArgumentParser, with_start: bool) -> None:
    parser.add_argument("--graph", required=True, help="database GraphDocument")
    parser.add_argument("--query", required=True, help="QueryDocument")
    if with_start:
        parser.add_argument("--start", choices=["first", "rarest"], default=None,
                            help="starting-node strategy (default from settings)")
        parser.add_argument("--counters", action="store_true", help="collect and report search counters")
        parser.add_argument("--workers", type=_positive_int, default=None,
                            help="threads over starting candidates")
    parser.add_argument("--limit", type=_positive_int, default=None, help="stop after N embeddings")
    parser.add_argument("--out", default=None, help="ResultDocument destination")
    parser.add_argument("--dedup", action="store_true", help="keep one embedding per matched subgraph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bbgraph", description="BB-Graph subgraph isomorphism toolkit")
    parser.add_argument("--config", default=None, help="settings JSON (default config/settings.json)")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--log-file", dest="log_file", action=argparse.BooleanOptionalAction, default=None,
                        help="also log to logs/bbgraph.log")
    parser.add_argument("--color", action="store_true", default=None, help="ANSI colors in console logs")
    commands = parser.add_subparsers(dest="command", required=True)

    _add_match_flags(commands.add_parser("match", help="find all embeddings with BB-Graph"), with_start=True)
    oracle = commands.add_parser("oracle", help="brute-force enumeration (small instances)")
    _add_match_flags(oracle, with_start=False)
    oracle.add_argument("--budget", type=_positive_int, default=None, help="max node-map extension attempts")
    _add_match_flags(commands.add_parser("global", help="global-candidate baseline"), with_start=False)

    generate = commands.add_parser("generate", help="seeded synthetic graph")
    generate.add_argument("--nodes", type=_positive_int, required=True)
    generate.add_argument("--edges", type=int, required=True)
    generate.add_argument("--node-labels", type=_positive_int, default=None)
    generate.add_argument("--edge-labels", type=_positive_int, default=None)
    generate.add_argument("--distribution", choices=["uniform", "zipf"], default="uniform")
    generate.add_argument("--zipf-s", type=_positive_float, default=None)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--self-loops", action="store_true")
    generate.add_argument("--no-parallel", action="store_true")
    generate.add_argument("--out", required=True)

    extract = commands.add_parser("extract", help="extract a query workload from a graph")
    extract.add_argument("--graph", required=True)
    extract.add_argument("--kind", choices=["path", "complex"], required=True)
    extract.add_argument("--length", type=_positive_int, default=5, help="path query node count")
    extract.add_argument("--nodes", type=_positive_int, default=4, help="complex query node count")
    extract.add_argument("--extra-edges", type=int, default=1)
    extract.add_argument("--count", type=_positive_int, default=1)
    extract.add_argument("--seed", type=int, default=0)
    extract.add_argument("--perturb", action="store_true")
    extract.add_argument("--single", action="store_true", help="write one QueryDocument instead of a workload")
    extract.add_argument("--out", required=True)

    bench = commands.add_parser("bench", help="benchmark matchers over a workload")
    bench.add_argument("--graph", required=True)
    bench.add_argument("--workload", required=True, help="workload file or a single QueryDocument")
    bench.add_argument("--matchers", default=None, help="comma-separated: bbgraph,global,oracle")
    bench.add_argument("--reps", type=_positive_int, default=None, help="timed runs per cell (default 10)")
    bench.add_argument("--timeout", type=_positive_float, default=None, help="seconds per run (default 1800)")
    bench.add_argument("--no-timing", action="store_true", help="single untimed run per cell")
    bench.add_argument("--workers", type=_positive_int, default=None, help="threads, only with --no-timing")
    bench.add_argument("--budget", type=_positive_int, default=None, help="oracle extension budget")
    bench.add_argument("--out", required=True, help="report JSON; a .tsv table is written alongside")

    validate = commands.add_parser("validate", help="independently re-check a ResultDocument")
    validate.add_argument("--graph", required=True)
    validate.add_argument("--query", required=True)
    validate.add_argument("--results", required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    try:
        settings = load_settings(args.config)
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)

    if args.log_level is not None:
        settings.log_level = args.log_level
    if args.log_file is not None:
        settings.log_to_file = args.log_file
    if args.color:
        settings.use_colors = True

    logger = initialize_logger(settings)
    logger.debug(f"[CLI] {args.command} with settings {settings}")
    return run_command(args, settings)


if __name__ == "__main__":
    sys.exit(main())
