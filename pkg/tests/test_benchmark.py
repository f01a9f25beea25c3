import time

import pytest

from benchmark.benchmark import STATUS_ERROR, STATUS_OK, STATUS_TIMEOUT, BenchQuery, PerformanceBenchmark
from benchmark.runners import BaseMatcherRunner, BBGraphRunner, MatcherFactory, RunOutcome
from graph_core.errors import ValidationError
from tests import worked_example


class _SlowRunner(BaseMatcherRunner):
    name = "slow"

    def run(self, q, g, deadline=None):
        time.sleep(0.05)
        return RunOutcome([])


class _BrokenRunner(BaseMatcherRunner):
    name = "broken"

    def run(self, q, g, deadline=None):
        raise RuntimeError("boom")


@pytest.fixture
def workload(worked_query):
    return [BenchQuery("worked", worked_query)]


def test_all_matchers_agree_on_worked(worked_graph, workload):
    result = PerformanceBenchmark().run_bench(worked_graph, workload, ["bbgraph", "oracle", "global"],
                                              repetitions=2, graph_id="worked_graph")
    assert result.agreement == {"worked": True}
    for name in ("bbgraph", "oracle", "global"):
        cell = result.cell("worked", name)
        assert cell.status == STATUS_OK
        assert cell.embedding_count == 2
        assert cell.repetitions == 2
        assert cell.mean_seconds is not None and cell.min_seconds <= cell.mean_seconds <= cell.max_seconds
    assert result.cell("worked", "bbgraph").counters["embeddings"] == 2
    assert result.cell("worked", "bbgraph").query_kind == "complex"
    assert set(result.memory["worked"]) == {"rss_before_mb", "rss_after_mb"}


def test_repetitions_do_not_change_counts(worked_graph, workload):
    bench = PerformanceBenchmark()
    once = bench.run_bench(worked_graph, workload, ["bbgraph"], repetitions=1)
    many = bench.run_bench(worked_graph, workload, ["bbgraph"], repetitions=10)
    assert once.cell("worked", "bbgraph").embedding_count == many.cell("worked", "bbgraph").embedding_count
    assert many.cell("worked", "bbgraph").repetitions == 10


def test_timeout_and_failure_are_isolated(monkeypatch, worked_graph, workload):
    monkeypatch.setitem(MatcherFactory.RUNNERS, "slow", _SlowRunner)
    monkeypatch.setitem(MatcherFactory.RUNNERS, "broken", _BrokenRunner)
    result = PerformanceBenchmark().run_bench(worked_graph, workload, ["slow", "broken", "bbgraph"],
                                              repetitions=3, timeout=0.01)
    slow = result.cell("worked", "slow")
    assert slow.status == STATUS_TIMEOUT
    assert slow.embedding_count is None and slow.mean_seconds is None
    broken = result.cell("worked", "broken")
    assert broken.status == STATUS_ERROR
    assert "boom" in broken.error
    assert result.cell("worked", "bbgraph").status == STATUS_OK
    # censored cells take no part in the agreement check
    assert result.agreement["worked"]


def test_disagreement_is_reported(monkeypatch, worked_graph, workload):
    class _EmptyRunner(BaseMatcherRunner):
        name = "empty"

        def run(self, q, g, deadline=None):
            return RunOutcome([])

    monkeypatch.setitem(MatcherFactory.RUNNERS, "empty", _EmptyRunner)
    result = PerformanceBenchmark().run_bench(worked_graph, workload, ["bbgraph", "empty"], repetitions=1)
    assert result.agreement == {"worked": False}
    assert not result.cell("worked", "empty").agreement


def test_untimed_parallel_run(worked_graph, worked_query):
    queries = [BenchQuery(f"q{i}", worked_query) for i in range(4)]
    result = PerformanceBenchmark().run_bench(worked_graph, queries, ["bbgraph", "global"], repetitions=10,
                                              timed=False, workers=3)
    assert result.repetitions == 1
    assert len(result.cells) == 8
    assert all(c.embedding_count == 2 for c in result.cells)
    assert [c.query for c in result.cells][:2] == ["q0", "q0"]


def test_report_dict_shape(worked_graph, workload):
    report = PerformanceBenchmark().run_bench(worked_graph, workload, ["bbgraph"], repetitions=1,
                                              graph_id="g").to_dict()
    assert report["graph"] == "g"
    assert report["cells"][0]["matcher"] == "bbgraph"
    assert report["cells"][0]["query_nodes"] == len(worked_example.QUERY_NODES)


def test_factory():
    assert isinstance(MatcherFactory.create_runner("BBGraph"), BBGraphRunner)
    assert MatcherFactory.parse_list("bbgraph, global,bbgraph") == ["bbgraph", "global"]
    with pytest.raises(ValidationError):
        MatcherFactory.create_runner("vf2")
    with pytest.raises(ValidationError):
        MatcherFactory.parse_list(" , ")
