# benchmark/benchmark.py
"""
Performance benchmarking of the matchers over a query workload.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
import psutil

from data_models.models import OracleBudget, SearchConfig
from graph_core.errors import BudgetExceededError, SearchTimeoutError
from graph_core.graph import Graph, QueryGraph
from logger.log_manager import LogManager
from matcher.embedding import Embedding

from .runners import BaseMatcherRunner, MatcherFactory

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"
STATUS_BUDGET = "budget"
STATUS_ERROR = "error"


@dataclass
class BenchQuery:
    id: str
    query: QueryGraph
    kind: str = ""


@dataclass
class BenchCell:
    """One (query, matcher) measurement."""
    query: str
    graph: str
    query_nodes: int
    query_edges: int
    query_kind: str
    matcher: str
    status: str = STATUS_OK
    repetitions: int = 0
    mean_seconds: Optional[float] = None
    min_seconds: Optional[float] = None
    max_seconds: Optional[float] = None
    std_seconds: Optional[float] = None
    embedding_count: Optional[int] = None
    counters: Optional[Dict[str, int]] = None
    error: Optional[str] = None
    agreement: bool = False


@dataclass
class BenchResult:
    graph: str
    repetitions: int
    timeout_sec: float
    timed: bool
    cells: List[BenchCell] = field(default_factory=list)
    agreement: Dict[str, bool] = field(default_factory=dict)
    memory: Dict[str, Dict[str, float]] = field(default_factory=dict)
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())

    def cell(self, query: str, matcher: str) -> BenchCell:
        for c in self.cells:
            if c.query == query and c.matcher == matcher:
                return c
        raise KeyError((query, matcher))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp,
            "graph": self.graph,
            "repetitions": self.repetitions,
            "timeout_sec": self.timeout_sec,
            "timed": self.timed,
            "agreement": dict(self.agreement),
            "memory_mb": dict(self.memory),
            "cells": [asdict(c) for c in self.cells],
        }


def _rss_mb(process: psutil.Process) -> float:
    return process.memory_info().rss / (1024 ** 2)


class PerformanceBenchmark:
    """Times every (query, matcher) cell and checks cross-matcher agreement."""

    def __init__(self, search_config: Optional[SearchConfig] = None,
                 oracle_budget: Optional[OracleBudget] = None):
        self.search_config = search_config or SearchConfig(collect_counters=True)
        self.oracle_budget = oracle_budget or OracleBudget()
        self.results: Optional[BenchResult] = None

    def run_bench(self, graph: Graph, queries: Sequence[BenchQuery], matchers: Sequence[str],
                  repetitions: int = 10, timeout: float = 1800.0, graph_id: str = "",
                  timed: bool = True, workers: int = 1) -> BenchResult:
        """
        Run every matcher on every query.

        Args:
            graph: loaded database graph (construction is not timed)
            queries: workload
            matchers: runner names, see MatcherFactory
            repetitions: timed runs per cell; the mean is reported
            timeout: wall-clock seconds per run before the cell is censored
            graph_id: name recorded in the report
            timed: False runs each cell once, concurrently on `workers` threads
            workers: thread count for untimed runs

        Returns:
            BenchResult; matcher failures are recorded in cell status, never raised
        """
        runners = [MatcherFactory.create_runner(name, self.search_config, self.oracle_budget)
                   for name in matchers]
        repetitions = repetitions if timed else 1
        result = BenchResult(graph=graph_id, repetitions=repetitions, timeout_sec=timeout, timed=timed)
        logger.info(f"[Benchmark] Starting benchmark: {len(queries)} queries x {len(runners)} matchers, "
                    f"repetitions={repetitions}, timeout={timeout}s, timed={timed}")

        process = psutil.Process()
        jobs = [(bq, runner) for bq in queries for runner in runners]
        if timed or workers <= 1:
            outcomes = []
            for bq in queries:
                before = _rss_mb(process)
                for runner in runners:
                    outcomes.append(self._run_cell(graph, graph_id, bq, runner, repetitions, timeout))
                result.memory[bq.id] = {"rss_before_mb": round(before, 3),
                                        "rss_after_mb": round(_rss_mb(process), 3)}
        else:
            with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="Bench") as pool:
                outcomes = list(pool.map(
                    lambda job: self._run_cell(graph, graph_id, job[0], job[1], 1, timeout), jobs))

        for bq in queries:
            mine = [(cell, found) for cell, found in outcomes if cell.query == bq.id]
            agreed = self._agreement([found for cell, found in mine if cell.status == STATUS_OK])
            result.agreement[bq.id] = agreed
            for cell, _ in mine:
                cell.agreement = agreed
                result.cells.append(cell)
            if not agreed:
                LogManager.log_query_event(bq.id, "WARNING", "matchers disagree on the embedding set")

        timeouts = sum(1 for c in result.cells if c.status == STATUS_TIMEOUT)
        logger.info(f"[Benchmark] Benchmark completed: {len(result.cells)} cells, {timeouts} timeouts, "
                    f"{sum(1 for a in result.agreement.values() if not a)} disagreements")
        self.results = result
        return result

    @staticmethod
    def _agreement(found: List[FrozenSet[Embedding]]) -> bool:
        return all(s == found[0] for s in found[1:])

    def _run_cell(self, graph: Graph, graph_id: str, bq: BenchQuery, runner: BaseMatcherRunner,
                  repetitions: int, timeout: float) -> Tuple[BenchCell, FrozenSet[Embedding]]:
        q = bq.query
        cell = BenchCell(query=bq.id, graph=graph_id, query_nodes=q.node_count, query_edges=q.edge_count,
                         query_kind=bq.kind or ("path" if q.is_path() else "complex"), matcher=runner.name)
        times: List[float] = []
        found: FrozenSet[Embedding] = frozenset()
        for rep in range(repetitions):
            started = time.perf_counter()
            try:
                outcome = runner.run(q, graph, deadline=started + timeout)
            except SearchTimeoutError:
                cell.status = STATUS_TIMEOUT
                LogManager.log_query_event(bq.id, "WARNING", f"{runner.name} exceeded {timeout}s",
                                           matcher=runner.name)
                break
            except BudgetExceededError as e:
                cell.status = STATUS_BUDGET
                cell.error = str(e)
                LogManager.log_query_event(bq.id, "WARNING", f"{runner.name}: {e}", matcher=runner.name)
                break
            except Exception as e:
                cell.status = STATUS_ERROR
                cell.error = f"{type(e).__name__}: {e}"
                logger.exception(f"[Benchmark] {runner.name} failed on query {bq.id}: {e}")
                break
            elapsed = time.perf_counter() - started
            if elapsed > timeout:
                cell.status = STATUS_TIMEOUT
                break
            times.append(elapsed)
            if rep == 0:
                found = frozenset(outcome.embeddings)
                cell.embedding_count = len(outcome.embeddings)
                cell.counters = outcome.counters

        cell.repetitions = len(times)
        if cell.status == STATUS_OK:
            cell.mean_seconds = float(np.mean(times))
            cell.min_seconds = float(np.min(times))
            cell.max_seconds = float(np.max(times))
            cell.std_seconds = float(np.std(times))
            LogManager.log_query_event(bq.id, "INFO",
                                       f"{runner.name}: {cell.embedding_count} embeddings, "
                                       f"mean={cell.mean_seconds:.4f}s over {cell.repetitions} runs",
                                       matcher=runner.name)
        else:
            cell.embedding_count = None
            cell.counters = None
        return cell, found
