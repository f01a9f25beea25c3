# baselines/global_candidate.py
"""
Global-candidate matcher in the Ullmann tradition.

Candidate sets are computed for every query node over the whole database
before any search starts; the search then assigns query nodes in
ascending id order, whether or not they are adjacent to the nodes placed
so far. This is the globally filtered strategy BB-Graph's local search is
compared against.
"""

import logging
import time
from typing import List, Optional, Set

from graph_core.errors import SearchTimeoutError
from graph_core.graph import Graph, QueryGraph
from graph_core.principals import bind_query
from matcher.embedding import Embedding

logger = logging.getLogger(__name__)


def global_candidate_match(q: QueryGraph, g: Graph, deadline: Optional[float] = None) -> List[Embedding]:
    """
    Find every embedding with globally filtered candidate sets.

    Args:
        q: query graph
        g: database graph
        deadline: optional time.perf_counter() deadline

    Returns:
        Embeddings; the same set as BB-Graph, in node-id assignment order
    """
    binding = bind_query(q, g)
    candidates = [sorted(binding.filter_nodes(u, binding.candidate_pool(u)).tolist())
                  for u in range(q.node_count)]
    logger.debug(f"[GlobalCandidate] Candidate set sizes: {[len(c) for c in candidates]}")
    if any(not c for c in candidates):
        return []

    closing: List[List[int]] = [[] for _ in range(q.node_count)]
    for edge in q.edges:
        closing[max(edge.src, edge.dst)].append(edge.id)

    node_map: List[int] = [-1] * q.node_count
    edge_map: List[int] = [-1] * q.edge_count
    used_nodes: Set[int] = set()
    used_edges: Set[int] = set()
    results: List[Embedding] = []
    steps = [0]

    def poll() -> None:
        steps[0] += 1
        if deadline is not None and steps[0] % 4096 == 0 and time.perf_counter() > deadline:
            raise SearchTimeoutError("global-candidate search exceeded its deadline")

    def assign_node(u: int) -> None:
        if u == q.node_count:
            results.append(Embedding(tuple(node_map), tuple(edge_map)))
            return
        for v in candidates[u]:
            if v in used_nodes:
                continue
            poll()
            node_map[u] = v
            used_nodes.add(v)
            assign_edges(u, 0)
            used_nodes.discard(v)
        node_map[u] = -1

    def assign_edges(u: int, k: int) -> None:
        if k == len(closing[u]):
            assign_node(u + 1)
            return
        r = closing[u][k]
        edge = q.edges[r]
        for e in g.edges_between(node_map[edge.src], node_map[edge.dst]):
            if e in used_edges or not binding.edge_matches(r, edge.src, e, node_map[edge.src]):
                continue
            poll()
            edge_map[r] = e
            used_edges.add(e)
            assign_edges(u, k + 1)
            used_edges.discard(e)
        edge_map[r] = -1

    assign_node(0)
    logger.debug(f"[GlobalCandidate] {len(results)} embeddings after {steps[0]} steps")
    return results
