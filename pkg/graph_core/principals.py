# graph_core/principals.py
"""
Matching node principal (mnp) and matching relationship principal (mrp).

Both are necessary conditions for a query element to be mapped onto a
database element. A query is first bound to a database: its label names
are translated into the database's label ids once, and the per-node
degree requirements are prepared for scalar and vectorised checks.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import EdgeNotIncidentError, UnknownNodeError
from .graph import Direction, Graph, LabelSet, QueryGraph
from .signature_kernels import dominating_rows

logger = logging.getLogger(__name__)


class NodeRequirement:
    """Label set and degree signature a database node must dominate."""

    __slots__ = ("labels", "triples", "labs", "dirs", "need", "need_out", "need_in")

    def __init__(self, labels: Optional[LabelSet], triples: Sequence[Tuple[int, int, int]],
                 need_out: int, need_in: int):
        self.labels = labels
        self.triples = tuple(triples)
        self.labs = np.array([t[0] for t in self.triples], dtype=np.int64)
        self.dirs = np.array([t[1] for t in self.triples], dtype=np.int64)
        self.need = np.array([t[2] for t in self.triples], dtype=np.int32)
        self.need_out = need_out
        self.need_in = need_in


class BoundQuery:
    """A query translated into the label id space of one database graph."""

    def __init__(self, q: QueryGraph, g: Graph):
        self.graph = g
        self.query_edges = q.edges
        self.edge_labels: List[Optional[LabelSet]] = [
            self._translate(q.edge_vocab.names(e.labels), g.edge_vocab.lookup) for e in q.edges
        ]
        self.requirements: List[NodeRequirement] = [self._requirement(q, g, u) for u in range(q.node_count)]

    @staticmethod
    def _translate(names: Sequence[str], lookup) -> Optional[LabelSet]:
        ids = []
        for name in names:
            label_id = lookup(name)
            if label_id is None:
                return None
            ids.append(label_id)
        return frozenset(ids)

    def _requirement(self, q: QueryGraph, g: Graph, u: int) -> NodeRequirement:
        labels = self._translate(q.node_label_names(u), g.node_vocab.lookup)
        triples = []
        q_labels, q_dirs = np.nonzero(q.sig_counts[u])
        for q_label, direction in zip(q_labels.tolist(), q_dirs.tolist()):
            db_label = g.edge_vocab.lookup(q.edge_vocab.name(q_label))
            if db_label is None:
                # the query needs an edge label the database never uses
                labels = None
                break
            triples.append((db_label, direction, int(q.sig_counts[u, q_label, direction])))
        return NodeRequirement(labels, triples,
                               int(q.sig_totals[u, Direction.OUTGOING]),
                               int(q.sig_totals[u, Direction.INCOMING]))

    def node_matches(self, u: int, v: int) -> bool:
        """mnp without argument validation; used on the search hot path."""
        req = self.requirements[u]
        g = self.graph
        if req.labels is None or not req.labels <= g.nodes[v].labels:
            return False
        totals = g.sig_totals[v]
        if totals[0] < req.need_out or totals[1] < req.need_in:
            return False
        counts = g.sig_counts
        for label_id, direction, need in req.triples:
            if counts[v, label_id, direction] < need:
                return False
        return True

    def candidate_pool(self, u: int) -> np.ndarray:
        """Database nodes carrying u's rarest label, or every node when u is unlabeled."""
        req = self.requirements[u]
        g = self.graph
        if req.labels is None:
            return np.zeros(0, dtype=np.int64)
        if not req.labels:
            return np.arange(g.node_count, dtype=np.int64)
        rarest = min(req.labels, key=lambda l: (len(g.label_index.get(l, ())), l))
        return np.asarray(g.label_index.get(rarest, ()), dtype=np.int64)

    def estimated_candidates(self, u: int) -> int:
        """Number of database nodes whose label set contains all of u's labels."""
        req = self.requirements[u]
        if req.labels is None:
            return 0
        if not req.labels:
            return self.graph.node_count
        pool = self.candidate_pool(u)
        if len(req.labels) == 1:
            return int(pool.shape[0])
        nodes = self.graph.nodes
        return sum(1 for v in pool.tolist() if req.labels <= nodes[v].labels)

    def filter_nodes(self, u: int, rows: np.ndarray) -> np.ndarray:
        """Subset of rows passing mnp for u, order preserved."""
        req = self.requirements[u]
        g = self.graph
        if req.labels is None or rows.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        if len(req.labels) > 1:
            rows = np.asarray([v for v in rows.tolist() if req.labels <= g.nodes[v].labels], dtype=np.int64)
            if rows.shape[0] == 0:
                return rows
        mask = dominating_rows(g.sig_counts, g.sig_totals, rows, req.labs, req.dirs,
                               req.need, req.need_out, req.need_in)
        return rows[mask]

    def edge_matches(self, r: int, u: int, r_prime: int, u_prime: int) -> bool:
        """mrp without argument validation."""
        labels = self.edge_labels[r]
        db_edge = self.graph.edges[r_prime]
        if labels is None or not labels <= db_edge.labels:
            return False
        wanted = self.query_edges[r].directions(u)
        return any(d in wanted for d in db_edge.directions(u_prime))

    def edge_candidates(self, r: int, u: int, u_prime: int) -> List[int]:
        """Incident edges of u_prime passing mrp against query edge r at u, ascending."""
        labels = self.edge_labels[r]
        if labels is None:
            return []
        g = self.graph
        edge = self.query_edges[r]
        if edge.src == edge.dst:
            pool = sorted(set(g.out_edges[u_prime]) | set(g.in_edges[u_prime]))
        elif edge.src == u:
            pool = g.out_edges[u_prime]
        else:
            pool = g.in_edges[u_prime]
        if not labels:
            return list(pool)
        edges = g.edges
        return [eid for eid in pool if labels <= edges[eid].labels]


def bind_query(q: QueryGraph, g: Graph) -> BoundQuery:
    """Return the (cached) binding of q to g."""
    binding = g._bindings.get(q)
    if binding is None:
        binding = BoundQuery(q, g)
        g._bindings[q] = binding
    return binding


def mnp(q: QueryGraph, u: int, g: Graph, u_prime: int) -> bool:
    """
    Matching node principal: label containment plus degree-signature dominance.

    Args:
        q: query graph
        u: query node
        g: database graph
        u_prime: database node

    Returns:
        True iff u_prime may host u

    Raises:
        UnknownNodeError: u or u_prime does not exist
    """
    if not q.has_node(u):
        raise UnknownNodeError(u)
    if not g.has_node(u_prime):
        raise UnknownNodeError(u_prime)
    return bind_query(q, g).node_matches(u, u_prime)


def mrp(q: QueryGraph, r: int, u: int, g: Graph, r_prime: int, u_prime: int) -> bool:
    """
    Matching relationship principal: label containment plus equal direction
    w.r.t. the anchors. A self-loop realizes both directions.

    Raises:
        EdgeNotIncidentError: r not incident to u, or r_prime not incident to u_prime
    """
    if not 0 <= r < q.edge_count or not q.edges[r].directions(u):
        raise EdgeNotIncidentError(r, u)
    if not 0 <= r_prime < g.edge_count or not g.edges[r_prime].directions(u_prime):
        raise EdgeNotIncidentError(r_prime, u_prime)
    return bind_query(q, g).edge_matches(r, u, r_prime, u_prime)
