import time
from collections import Counter

import numpy as np
import pytest

from baselines.global_candidate import global_candidate_match
from benchmark.generator import generate_graph
from benchmark.workload import extract_query
from data_models.models import GenSpec, LabelDistribution, QueryKind, SearchConfig, WorkloadSpec
from deep_parity_test import (
    MAX_DB_EDGES, MAX_MULTIPLICITY, check_instance, random_database, random_instance, run_parity,
)
from graph_io.results import ResultDocument
from matcher.bb_graph import match_all
from matcher.embedding import validate_embeddings
from utils.file_utils import FileUtils


def test_parity_sweep():
    started = time.perf_counter()
    report = run_parity(instances=500, seed=2024)
    assert report.instances == 500
    assert report.mismatches == []
    # roughly half of the instances are extracted, so most embed at least once
    assert report.extracted > 100
    assert report.embeddings > 0
    assert time.perf_counter() - started < 60.0


def test_random_databases_bound_edge_multiplicity():
    rng = np.random.default_rng(2024)
    for _ in range(300):
        g = random_database(rng)
        assert g.edge_count <= MAX_DB_EDGES
        pairs = Counter((e.src, e.dst) for e in g.edges)
        assert max(pairs.values(), default=0) <= MAX_MULTIPLICITY


@pytest.mark.parametrize("seed", [1, 7, 99])
def test_single_instances_agree(seed):
    rng = np.random.default_rng(seed)
    for _ in range(20):
        q, g, _ = random_instance(rng)
        problem, _ = check_instance(q, g)
        assert problem is None


def _comparison_workload(g, rng):
    """Ten 5-node path queries and ten complex queries of 4 to 7 nodes."""
    specs = [WorkloadSpec(query_kind=QueryKind.PATH, path_length=5)] * 10
    specs += [WorkloadSpec(query_kind=QueryKind.COMPLEX, nodes=4 + i % 4, extra_edges=1) for i in range(10)]
    return [extract_query(g, spec, rng).build() for spec in specs]


def _result_bytes(g, queries):
    documents = [ResultDocument(match_all(q, g).embeddings, f"q{i}", "g") for i, q in enumerate(queries)]
    return [FileUtils.dumps_json(d.to_dict(include_timing=False)) for d in documents]


def test_workload_results_are_byte_identical_across_runs():
    g = generate_graph(GenSpec(node_count=2_000, edge_count=6_000, node_label_alphabet=12,
                               edge_label_alphabet=17, label_distribution=LabelDistribution.ZIPF,
                               seed=11)).build()
    queries = _comparison_workload(g, np.random.default_rng(11))
    again = _comparison_workload(g, np.random.default_rng(11))
    assert [q.edge_specs() for q in queries] == [q.edge_specs() for q in again]
    assert _result_bytes(g, queries) == _result_bytes(g, again)


@pytest.mark.slow
def test_soundness_on_large_graph():
    g = generate_graph(GenSpec(node_count=10_000, edge_count=30_000, seed=5)).build()
    rng = np.random.default_rng(5)
    for i in range(100):
        kind = QueryKind.PATH if i % 2 == 0 else QueryKind.COMPLEX
        spec = WorkloadSpec(query_kind=kind, path_length=4, nodes=4, extra_edges=1)
        q = extract_query(g, spec, rng).build()
        result = match_all(q, g, SearchConfig(collect_counters=True))
        assert len(result) >= 1
        assert validate_embeddings(q, g, result.embeddings) == len(result)
        assert result.counters.peak_candidate_cells <= q.edge_count * g.max_degree


@pytest.fixture(scope="module")
def zipf_database():
    return generate_graph(GenSpec(node_count=50_000, edge_count=150_000, node_label_alphabet=12,
                                  edge_label_alphabet=17, label_distribution=LabelDistribution.ZIPF,
                                  seed=11)).build()


@pytest.mark.slow
def test_local_search_beats_global_candidates(zipf_database):
    g = zipf_database
    wins = 0
    queries = _comparison_workload(g, np.random.default_rng(11))
    for q in queries:
        started = time.perf_counter()
        local = match_all(q, g)
        local_sec = time.perf_counter() - started
        started = time.perf_counter()
        found = global_candidate_match(q, g)
        global_sec = time.perf_counter() - started
        assert frozenset(local.embeddings) == frozenset(found)
        assert local_sec < 60.0
        wins += local_sec <= global_sec
    assert wins >= 0.8 * len(queries)


@pytest.mark.slow
def test_large_workload_results_are_byte_identical(zipf_database):
    first = _comparison_workload(zipf_database, np.random.default_rng(11))
    second = _comparison_workload(zipf_database, np.random.default_rng(11))
    assert _result_bytes(zipf_database, first) == _result_bytes(zipf_database, second)
