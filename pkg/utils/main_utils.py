# main_utils.py
"""
Command implementations behind main.py. Each cmd_* takes the parsed
arguments and the resolved settings, prints one summary line and returns
an exit code; errors propagate to main(), which maps them with exit_code_for().
"""

import logging
import sys
import time
from typing import List, Optional

from benchmark.benchmark import BenchQuery, PerformanceBenchmark
from benchmark.generator import generate_graph
from benchmark.runners import MatcherFactory
from benchmark.workload import extract_query, extract_workload
from data_models.models import (
    GenSpec, LabelDistribution, OracleBudget, ProgramSettings, QueryKind, StartStrategy, WorkloadSpec,
)
from graph_core.errors import (
    BudgetExceededError, GraphError, GraphIOError, InvalidEmbeddingError, ParseError,
    SearchTimeoutError, ValidationError,
)
from graph_io.documents import load_graph, load_query, load_workload, write_document
from graph_io.results import ResultDocument, dedup_by_subgraph, read_results, write_report, write_results
from logger.log_manager import LogManager
from matcher.bb_graph import BBGraphMatcher
from matcher.embedding import Embedding, validate_embeddings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_INVALID_EMBEDDING = 5
EXIT_IO = 6
EXIT_TIMEOUT = 7


def exit_code_for(error: BaseException) -> int:
    """Stable exit code for an exception raised by a command."""
    if isinstance(error, ParseError):
        return EXIT_PARSE
    if isinstance(error, InvalidEmbeddingError):
        return EXIT_INVALID_EMBEDDING
    if isinstance(error, ValidationError):
        return EXIT_VALIDATION
    if isinstance(error, (SearchTimeoutError, BudgetExceededError)):
        return EXIT_TIMEOUT
    if isinstance(error, (GraphIOError, OSError)):
        return EXIT_IO
    return EXIT_RUNTIME


def initialize_logger(settings: ProgramSettings) -> logging.Logger:
    return LogManager.initialize_logger(log_to_file=settings.log_to_file, log_level=settings.log_level,
                                        use_colors=settings.use_colors)


def _finish_embeddings(embeddings: List[Embedding], args, settings: ProgramSettings) -> List[Embedding]:
    if getattr(args, "dedup", False) or settings.output.dedup_subgraphs:
        return dedup_by_subgraph(embeddings)
    return embeddings


def _write_if_requested(args, document: ResultDocument) -> None:
    if args.out:
        write_results(document, args.out)


def cmd_match(args, settings: ProgramSettings) -> int:
    """Run BB-Graph on one query; optional ResultDocument at --out."""
    g = load_graph(args.graph)
    q = load_query(args.query)
    config = settings.search_config(
        start_strategy=StartStrategy(args.start) if args.start else None,
        result_limit=args.limit,
        collect_counters=True if args.counters else None,
        workers=args.workers,
    )
    result = BBGraphMatcher(q, g, config).match_all()
    embeddings = _finish_embeddings(result.embeddings, args, settings)
    elapsed_ms = result.elapsed_sec * 1000.0
    counters = result.counters.to_dict() if result.counters is not None else None
    _write_if_requested(args, ResultDocument(embeddings, args.query, args.graph, "bbgraph", elapsed_ms, counters))

    summary = f"embeddings={len(embeddings)} elapsed_ms={elapsed_ms:.3f}"
    if counters is not None:
        summary += " " + " ".join(f"{k}={v}" for k, v in counters.items())
    print(summary)
    return EXIT_OK


def _run_reference(name: str, args, settings: ProgramSettings, budget: Optional[int] = None) -> int:
    g = load_graph(args.graph)
    q = load_query(args.query)
    oracle_budget = OracleBudget(budget or settings.oracle.max_mappings_explored)
    runner = MatcherFactory.create_runner(name, oracle_budget=oracle_budget)

    started = time.perf_counter()
    outcome = runner.run(q, g)
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    embeddings = _finish_embeddings(outcome.embeddings, args, settings)
    if args.limit is not None:
        embeddings = embeddings[:args.limit]
    _write_if_requested(args, ResultDocument(embeddings, args.query, args.graph, name, elapsed_ms))
    print(f"embeddings={len(embeddings)} elapsed_ms={elapsed_ms:.3f}")
    return EXIT_OK


def cmd_oracle(args, settings: ProgramSettings) -> int:
    """Brute-force enumeration; --budget caps node-map extension attempts."""
    return _run_reference("oracle", args, settings, args.budget)


def cmd_global(args, settings: ProgramSettings) -> int:
    """Global-candidate baseline."""
    return _run_reference("global", args, settings)


def cmd_generate(args, settings: ProgramSettings) -> int:
    spec = GenSpec(
        node_count=args.nodes,
        edge_count=args.edges,
        node_label_alphabet=args.node_labels or settings.generator.node_label_alphabet,
        edge_label_alphabet=args.edge_labels or settings.generator.edge_label_alphabet,
        label_distribution=LabelDistribution(args.distribution),
        zipf_exponent=args.zipf_s if args.zipf_s is not None else settings.generator.zipf_exponent,
        seed=args.seed,
        allow_self_loops=args.self_loops,
        allow_parallel_edges=not args.no_parallel,
    )
    document = generate_graph(spec)
    write_document(document, args.out)
    print(f"generated |V|={len(document.nodes)} |E|={len(document.edges)} -> {args.out}")
    return EXIT_OK


def cmd_extract(args, settings: ProgramSettings) -> int:
    g = load_graph(args.graph)
    spec = WorkloadSpec(
        query_kind=QueryKind(args.kind),
        path_length=args.length,
        nodes=args.nodes,
        extra_edges=args.extra_edges,
        count=args.count,
        seed=args.seed,
        perturb=args.perturb,
    )
    if args.single:
        if args.count != 1:
            raise ValidationError("--single requires --count 1", "extract")
        document = extract_query(g, spec)
        write_document(document, args.out)
        print(f"extracted 1 {spec.query_kind.value} query |V|={len(document.nodes)} "
              f"|E|={len(document.edges)} -> {args.out}")
        return EXIT_OK

    workload = extract_workload(g, spec, graph_name=args.graph)
    write_document(workload, args.out)
    print(f"extracted {len(workload.queries)} {spec.query_kind.value} queries -> {args.out}")
    return EXIT_OK


def cmd_bench(args, settings: ProgramSettings) -> int:
    """Benchmark matchers over a workload; JSON report at --out plus a .tsv table."""
    g = load_graph(args.graph)
    workload = load_workload(args.workload)
    queries = [BenchQuery(entry.id, entry.query.build(), entry.kind) for entry in workload.queries]
    matchers = MatcherFactory.parse_list(args.matchers) if args.matchers else list(settings.bench.matchers)
    repetitions = args.reps if args.reps is not None else settings.bench.repetitions
    timeout = args.timeout if args.timeout is not None else settings.bench.timeout_sec
    budget = OracleBudget(args.budget or settings.oracle.max_mappings_explored)

    bench = PerformanceBenchmark(settings.search_config(collect_counters=True), budget)
    result = bench.run_bench(
        g, queries, matchers,
        repetitions=repetitions,
        timeout=timeout,
        graph_id=args.graph,
        timed=not args.no_timing,
        workers=args.workers or settings.bench.workers,
    )
    table = write_report(result.to_dict(), args.out)
    agreed = sum(1 for ok in result.agreement.values() if ok)
    print(f"cells={len(result.cells)} agreement={agreed}/{len(result.agreement)} report={args.out} table={table}")
    return EXIT_OK


def cmd_validate(args, settings: ProgramSettings) -> int:
    """Re-verify every embedding of a ResultDocument; InvalidEmbeddingError on the first bad one."""
    g = load_graph(args.graph)
    q = load_query(args.query)
    results = read_results(args.results)
    checked = validate_embeddings(q, g, results.embeddings)
    print(f"valid embeddings={checked}")
    return EXIT_OK


COMMANDS = {
    "match": cmd_match,
    "oracle": cmd_oracle,
    "global": cmd_global,
    "generate": cmd_generate,
    "extract": cmd_extract,
    "bench": cmd_bench,
    "validate": cmd_validate,
}


def run_command(args, settings: ProgramSettings) -> int:
    """Dispatch to the command and map library errors to exit codes."""
    try:
        return COMMANDS[args.command](args, settings)
    except (GraphError, OSError) as e:
        logger.debug(f"[CLI] {args.command} failed", exc_info=True)
        tag = f" [{e.invariant}]" if isinstance(e, ValidationError) else ""
        print(f"error{tag}: {e}", file=sys.stderr)
        return exit_code_for(e)
