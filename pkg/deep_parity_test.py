"""
Seeded cross-matcher parity sweep.

Random small instances are solved by BB-Graph (both starting strategies),
the global-candidate baseline and the brute-force oracle; any difference
in embedding sets, a duplicate emission, a validator complaint, a state
left dirty after a search, or a candidate-list peak above
|E_Q| * max degree is logged as a mismatch.

Run by hand:  python deep_parity_test.py [instances] [seed]
"""

import logging
import sys
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from baselines.global_candidate import global_candidate_match
from baselines.oracle import oracle_enumerate
from data_models.models import SearchConfig, StartStrategy
from graph_core.graph import Graph, QueryGraph, build_graph, build_query
from logger.log_manager import LogManager
from matcher.bb_graph import BBGraphMatcher, candidates_for_start, choose_start
from matcher.embedding import embedding_violation
from matcher.state import MatchState

logger = logging.getLogger("ParityTest")

NODE_LABELS = ["A", "B", "C"]
EDGE_LABELS = ["x", "y"]
MAX_DB_NODES = 12
MAX_DB_EDGES = 20
MAX_QUERY_NODES = 5
# edges per ordered (src, dst) pair, self-loops included; k parallel
# edges already admit k! edge assignments
MAX_MULTIPLICITY = 3


@dataclass
class ParityReport:
    instances: int = 0
    embeddings: int = 0
    extracted: int = 0
    mismatches: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _labels(rng: np.random.Generator, alphabet: List[str], max_labels: int) -> List[str]:
    k = int(rng.integers(0, max_labels + 1))
    return sorted(rng.choice(alphabet, size=k, replace=False).tolist()) if k else []


def random_database(rng: np.random.Generator) -> Graph:
    """
    Up to 12 nodes / 20 edges with self-loops, multi-labels and parallel
    edges, at most MAX_MULTIPLICITY edges per ordered node pair.
    """
    n = int(rng.integers(1, MAX_DB_NODES + 1))
    m = min(int(rng.integers(0, MAX_DB_EDGES + 1)), n * n * MAX_MULTIPLICITY)
    nodes = [(v, _labels(rng, NODE_LABELS, 2)) for v in range(n)]
    multiplicity: Counter = Counter()
    edges = []
    while len(edges) < m:
        src, dst = int(rng.integers(n)), int(rng.integers(n))
        if multiplicity[(src, dst)] == MAX_MULTIPLICITY:
            continue
        multiplicity[(src, dst)] += 1
        edges.append((len(edges), src, dst, _labels(rng, EDGE_LABELS, 1)))
    return build_graph(nodes, edges)


def _subset(rng: np.random.Generator, labels: List[str]) -> List[str]:
    return [l for l in labels if rng.random() < 0.7]


def extracted_query(g: Graph, rng: np.random.Generator) -> QueryGraph:
    """Connected sub-pattern of g with thinned labels, so at least one embedding exists."""
    size = int(rng.integers(1, MAX_QUERY_NODES + 1))
    chosen = [int(rng.integers(g.node_count))]
    tree_edges: List[int] = []
    while len(chosen) < size:
        frontier = [(entry.edge, entry.other) for v in chosen for entry in g.adjacency[v]
                    if entry.other not in chosen]
        if not frontier:
            break
        edge, other = frontier[int(rng.integers(len(frontier)))]
        chosen.append(other)
        tree_edges.append(edge)

    members = set(chosen)
    induced = sorted({e for v in chosen for e in g.out_edges[v] if g.edges[e].dst in members})
    extras = [e for e in induced if e not in tree_edges and rng.random() < 0.5]
    local = {v: i for i, v in enumerate(chosen)}
    nodes = [(i, _subset(rng, g.node_label_names(v))) for i, v in enumerate(chosen)]
    edges = [(i, local[g.edges[e].src], local[g.edges[e].dst], _subset(rng, g.edge_label_names(e)))
             for i, e in enumerate(sorted(tree_edges + extras))]
    return build_query(nodes, edges, int(rng.integers(len(nodes))))


def random_query(rng: np.random.Generator) -> QueryGraph:
    """Random connected pattern; may or may not embed."""
    k = int(rng.integers(1, MAX_QUERY_NODES + 1))
    edges = []
    for v in range(1, k):
        u = int(rng.integers(v))
        src, dst = (u, v) if rng.random() < 0.5 else (v, u)
        edges.append((len(edges), src, dst, _labels(rng, EDGE_LABELS, 1)))
    for _ in range(int(rng.integers(0, 3))):
        edges.append((len(edges), int(rng.integers(k)), int(rng.integers(k)), _labels(rng, EDGE_LABELS, 1)))
    nodes = [(v, _labels(rng, NODE_LABELS, 1)) for v in range(k)]
    return build_query(nodes, edges, 0)


def random_instance(rng: np.random.Generator) -> Tuple[QueryGraph, Graph, bool]:
    g = random_database(rng)
    if rng.random() < 0.5:
        return extracted_query(g, rng), g, True
    return random_query(rng), g, False


def state_left_clean(q: QueryGraph, g: Graph) -> bool:
    """Every per-candidate search must leave the temporary storage empty."""
    matcher = BBGraphMatcher(q, g)
    u_start = choose_start(q, StartStrategy.FIRST_NODE, g)
    state = MatchState()
    for u_prime in candidates_for_start(q, u_start, g):
        matcher.search_from(state, u_start, u_prime)
        if state.logical_content() != ((), ()) or state.eq2g or state.eg2q or state.g2q:
            return False
    return True


def check_instance(q: QueryGraph, g: Graph) -> Tuple[Optional[str], int]:
    """First discrepancy on one instance (or None) and the oracle's embedding count."""
    expected = oracle_enumerate(q, g)
    expected_set = frozenset(expected)

    first = BBGraphMatcher(q, g, SearchConfig(collect_counters=True)).match_all()
    rarest = BBGraphMatcher(q, g, SearchConfig(start_strategy=StartStrategy.RAREST_LABEL)).match_all()
    global_found = global_candidate_match(q, g)

    if len(set(first.embeddings)) != len(first.embeddings):
        return "BB-Graph emitted a duplicate embedding", len(expected)
    if frozenset(first.embeddings) != expected_set:
        return f"BB-Graph found {len(first)} embeddings, oracle {len(expected)}", len(expected)
    if frozenset(rarest.embeddings) != expected_set:
        return "rarest-label start changed the embedding set", len(expected)
    if frozenset(global_found) != expected_set:
        return f"global-candidate found {len(global_found)} embeddings, oracle {len(expected)}", len(expected)
    for index, embedding in enumerate(first.embeddings):
        clause = embedding_violation(q, g, embedding)
        if clause is not None:
            return f"embedding {index}: {clause}", len(expected)
    bound = q.edge_count * g.max_degree
    if first.counters.peak_candidate_cells > bound:
        return f"peak candidate cells {first.counters.peak_candidate_cells} > {bound}", len(expected)
    if not state_left_clean(q, g):
        return "search left matches or stack entries behind", len(expected)
    return None, len(expected)


def run_parity(instances: int = 500, seed: int = 0) -> ParityReport:
    rng = np.random.default_rng(seed)
    report = ParityReport()
    for index in range(instances):
        q, g, extracted = random_instance(rng)
        problem, count = check_instance(q, g)
        report.instances += 1
        report.embeddings += count
        report.extracted += int(extracted)
        if problem is not None:
            report.mismatches.append((index, problem))
            logger.error(f"Instance {index} ({q!r} in {g!r}): {problem}")
    logger.info(f"Parity sweep: {report.instances} instances ({report.extracted} extracted), "
                f"{report.embeddings} embeddings, {len(report.mismatches)} mismatches")
    return report


if __name__ == "__main__":
    LogManager.initialize_logger(log_to_file=True, log_level="INFO")
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 500
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    sys.exit(0 if run_parity(count, seed).ok else 1)
