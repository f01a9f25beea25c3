# matcher/embedding.py
"""
Embedding record and the independent embedding validator.

The validator re-reads both graphs through their public label names and
edge endpoints only; it shares nothing with the matchers' pruning code.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from graph_core.errors import InvalidEmbeddingError
from graph_core.graph import Graph, QueryGraph


@dataclass(frozen=True, order=True)
class Embedding:
    """One exact match. node_map[u] / edge_map[r] index by query node / edge id."""
    node_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]

    def subgraph_key(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        """Matched database elements, ignoring which query element maps where."""
        return frozenset(self.node_map), frozenset(self.edge_map)


def embedding_violation(q: QueryGraph, g: Graph, embedding: Embedding) -> Optional[str]:
    """
    Check one embedding against both graphs.

    Returns:
        Name of the first violated clause, or None when valid
    """
    node_map, edge_map = embedding.node_map, embedding.edge_map
    if len(node_map) != q.node_count:
        return "node map not total"
    if len(set(node_map)) != len(node_map):
        return "node map not injective"
    for u, v in enumerate(node_map):
        if not g.has_node(v):
            return f"query node {u} maps to unknown database node {v}"
        if not set(q.node_label_names(u)) <= set(g.node_label_names(v)):
            return f"label subset violated for query node {u}"

    if len(edge_map) != q.edge_count:
        return "edge map not total"
    if len(set(edge_map)) != len(edge_map):
        return "edge map not injective"
    for r, r_prime in enumerate(edge_map):
        if not 0 <= r_prime < g.edge_count:
            return f"query edge {r} maps to unknown database edge {r_prime}"
        q_edge, g_edge = q.edges[r], g.edges[r_prime]
        if g_edge.src != node_map[q_edge.src] or g_edge.dst != node_map[q_edge.dst]:
            return f"endpoint or direction mismatch for query edge {r}"
        if not set(q.edge_label_names(r)) <= set(g.edge_label_names(r_prime)):
            return f"label subset violated for query edge {r}"
    return None


def validate_embeddings(q: QueryGraph, g: Graph, embeddings: Iterable[Embedding]) -> int:
    """
    Validate every embedding.

    Returns:
        Number of embeddings checked

    Raises:
        InvalidEmbeddingError: first offending index and violated clause
    """
    count = 0
    for index, embedding in enumerate(embeddings):
        clause = embedding_violation(q, g, embedding)
        if clause is not None:
            raise InvalidEmbeddingError(index, clause)
        count += 1
    return count
