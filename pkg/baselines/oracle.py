# baselines/oracle.py
"""
Brute-force enumeration oracle.

Direct transcription of the subisomorphism definition: every injective
node map V_Q -> V_G is tried in lexicographic order, and every accepted
node map is expanded over all injective edge assignments. Label sets are
compared by name, so nothing here depends on the matchers' indexes.
"""

import logging
import time
from typing import List, Optional, Set

from data_models.models import OracleBudget
from graph_core.errors import BudgetExceededError, SearchTimeoutError
from graph_core.graph import Graph, QueryGraph
from matcher.embedding import Embedding

logger = logging.getLogger(__name__)


class _Enumeration:
    def __init__(self, q: QueryGraph, g: Graph, budget: OracleBudget, deadline: Optional[float]):
        self.q = q
        self.g = g
        self.budget = budget.max_mappings_explored
        self.deadline = deadline
        self.explored = 0
        self.q_node_labels = [set(q.node_label_names(u)) for u in range(q.node_count)]
        self.g_node_labels = [set(g.node_label_names(v)) for v in range(g.node_count)]
        self.q_edge_labels = [set(q.edge_label_names(r)) for r in range(q.edge_count)]
        self.g_edge_labels = [set(g.edge_label_names(e)) for e in range(g.edge_count)]
        # query edges become checkable once their later end point is mapped
        self.closing: List[List[int]] = [[] for _ in range(q.node_count)]
        for edge in q.edges:
            self.closing[max(edge.src, edge.dst)].append(edge.id)
        self.node_map: List[int] = [-1] * q.node_count
        self.used_nodes: Set[int] = set()
        self.results: List[Embedding] = []

    def compatible_edges(self, r: int) -> List[int]:
        edge = self.q.edges[r]
        wanted = self.q_edge_labels[r]
        return [e for e in self.g.edges_between(self.node_map[edge.src], self.node_map[edge.dst])
                if wanted <= self.g_edge_labels[e]]

    def extend(self, pos: int) -> None:
        if pos == self.q.node_count:
            self.assign_edges(0, [], set())
            return
        for v in range(self.g.node_count):
            if v in self.used_nodes:
                continue
            self.explored += 1
            if self.explored > self.budget:
                raise BudgetExceededError(self.budget)
            if self.deadline is not None and self.explored % 4096 == 0 and time.perf_counter() > self.deadline:
                raise SearchTimeoutError("oracle enumeration exceeded its deadline")
            if not self.q_node_labels[pos] <= self.g_node_labels[v]:
                continue
            self.node_map[pos] = v
            if all(self.compatible_edges(r) for r in self.closing[pos]):
                self.used_nodes.add(v)
                self.extend(pos + 1)
                self.used_nodes.discard(v)
            self.node_map[pos] = -1

    def assign_edges(self, r: int, edge_map: List[int], used_edges: Set[int]) -> None:
        if r == self.q.edge_count:
            self.results.append(Embedding(tuple(self.node_map), tuple(edge_map)))
            return
        for e in self.compatible_edges(r):
            if e in used_edges:
                continue
            edge_map.append(e)
            used_edges.add(e)
            self.assign_edges(r + 1, edge_map, used_edges)
            used_edges.discard(e)
            edge_map.pop()


def oracle_enumerate(q: QueryGraph, g: Graph, budget: Optional[OracleBudget] = None,
                     deadline: Optional[float] = None) -> List[Embedding]:
    """
    Enumerate every embedding by brute force.

    Args:
        q: query graph
        g: database graph (intended for at most a dozen or so nodes)
        budget: cap on node-map extension attempts
        deadline: optional time.perf_counter() deadline

    Returns:
        All embeddings, node maps in lexicographic order

    Raises:
        BudgetExceededError: more extension attempts than the budget allows
    """
    run = _Enumeration(q, g, budget or OracleBudget(), deadline)
    run.extend(0)
    logger.debug(f"[Oracle] {len(run.results)} embeddings after {run.explored} extensions")
    return run.results
