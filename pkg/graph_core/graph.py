# graph_core/graph.py
"""
Labeled directed multigraph model with adjacency, label and degree indexes.

A Graph is built once through build_graph() and never mutated afterwards.
Labels are strings at the API boundary and dense integer ids internally;
node labels and edge labels live in two separate vocabularies.
"""

import logging
import weakref
from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DanglingEndpointError,
    DisconnectedQueryError,
    DuplicateIdError,
    EmptyQueryError,
    InvalidStartError,
    NonDenseIdsError,
    UnknownNodeError,
)

logger = logging.getLogger(__name__)

NodeSpec = Tuple[int, Sequence[str]]
EdgeSpec = Tuple[int, int, int, Sequence[str]]
LabelSet = FrozenSet[int]


class Direction(IntEnum):
    """Edge direction relative to an anchor node."""
    OUTGOING = 0
    INCOMING = 1


class LabelVocabulary:
    """Interns label strings to dense integer ids."""

    def __init__(self, names: Iterable[str] = ()):
        self._names: List[str] = []
        self._ids: Dict[str, int] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> int:
        label_id = self._ids.get(name)
        if label_id is None:
            label_id = len(self._names)
            self._ids[name] = label_id
            self._names.append(name)
        return label_id

    def lookup(self, name: str) -> Optional[int]:
        return self._ids.get(name)

    def name(self, label_id: int) -> str:
        return self._names[label_id]

    def names(self, label_ids: Iterable[int]) -> List[str]:
        return sorted(self._names[i] for i in label_ids)

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids


@dataclass(frozen=True)
class Node:
    id: int
    labels: LabelSet


@dataclass(frozen=True)
class Edge:
    id: int
    src: int
    dst: int
    labels: LabelSet

    @property
    def is_self_loop(self) -> bool:
        return self.src == self.dst

    def directions(self, anchor: int) -> Tuple[Direction, ...]:
        """Directions this edge realizes w.r.t. anchor; a self-loop realizes both."""
        if self.src == self.dst == anchor:
            return (Direction.OUTGOING, Direction.INCOMING)
        if anchor == self.src:
            return (Direction.OUTGOING,)
        if anchor == self.dst:
            return (Direction.INCOMING,)
        return ()

    def other(self, anchor: int) -> int:
        """End point other than anchor; for a self-loop the anchor itself."""
        return self.dst if anchor == self.src else self.src


class AdjacencyEntry(NamedTuple):
    edge: int
    direction: Direction
    other: int


@dataclass(frozen=True)
class DegreeSignature:
    """Incident edge counts keyed by (edge label id, Direction), plus per-direction totals."""
    counts: Mapping[Tuple[int, Direction], int]
    totals: Mapping[Direction, int]

    def count(self, label_id: int, direction: Direction) -> int:
        return self.counts.get((label_id, direction), 0)

    def total(self, direction: Direction) -> int:
        return self.totals.get(direction, 0)


class Graph:
    """Immutable labeled directed multigraph. Use build_graph() to construct."""

    def __init__(self, nodes: Sequence[Node], edges: Sequence[Edge],
                 node_vocab: LabelVocabulary, edge_vocab: LabelVocabulary):
        self.nodes: Tuple[Node, ...] = tuple(nodes)
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.node_vocab = node_vocab
        self.edge_vocab = edge_vocab
        self._build_indexes()
        self._bindings: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()

    def _build_indexes(self) -> None:
        n = len(self.nodes)
        adjacency: List[List[AdjacencyEntry]] = [[] for _ in range(n)]
        out_edges: List[List[int]] = [[] for _ in range(n)]
        in_edges: List[List[int]] = [[] for _ in range(n)]
        pairs: Dict[Tuple[int, int], List[int]] = {}

        # edges are sorted by id, so every per-node list comes out ascending
        for e in self.edges:
            adjacency[e.src].append(AdjacencyEntry(e.id, Direction.OUTGOING, e.dst))
            adjacency[e.dst].append(AdjacencyEntry(e.id, Direction.INCOMING, e.src))
            out_edges[e.src].append(e.id)
            in_edges[e.dst].append(e.id)
            pairs.setdefault((e.src, e.dst), []).append(e.id)

        self.adjacency: Tuple[Tuple[AdjacencyEntry, ...], ...] = tuple(tuple(a) for a in adjacency)
        self.out_edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in out_edges)
        self.in_edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in in_edges)
        self._pairs: Dict[Tuple[int, int], Tuple[int, ...]] = {k: tuple(v) for k, v in pairs.items()}

        label_index: Dict[int, List[int]] = {}
        for node in self.nodes:
            for label_id in node.labels:
                label_index.setdefault(label_id, []).append(node.id)
        self.label_index: Dict[int, Tuple[int, ...]] = {k: tuple(v) for k, v in label_index.items()}

        totals = np.zeros((n, 2), dtype=np.int32)
        counts = np.zeros((n, len(self.edge_vocab), 2), dtype=np.int32)
        if self.edges:
            src = np.fromiter((e.src for e in self.edges), dtype=np.int64, count=len(self.edges))
            dst = np.fromiter((e.dst for e in self.edges), dtype=np.int64, count=len(self.edges))
            totals[:, Direction.OUTGOING] = np.bincount(src, minlength=n)
            totals[:, Direction.INCOMING] = np.bincount(dst, minlength=n)
            lab_src, lab_dst, lab_ids = [], [], []
            for e in self.edges:
                for label_id in e.labels:
                    lab_src.append(e.src)
                    lab_dst.append(e.dst)
                    lab_ids.append(label_id)
            if lab_ids:
                np.add.at(counts, (np.asarray(lab_src), np.asarray(lab_ids), int(Direction.OUTGOING)), 1)
                np.add.at(counts, (np.asarray(lab_dst), np.asarray(lab_ids), int(Direction.INCOMING)), 1)
        totals.setflags(write=False)
        counts.setflags(write=False)
        self.sig_totals: np.ndarray = totals
        self.sig_counts: np.ndarray = counts

        # distinct incident edges; a self-loop counts once
        degrees = [len(self.out_edges[v]) + len(self.in_edges[v])
                   - sum(1 for eid in self.out_edges[v] if self.edges[eid].dst == v)
                   for v in range(n)]
        self.max_degree: int = max(degrees, default=0)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_node(self, node_id: int) -> bool:
        return 0 <= node_id < len(self.nodes)

    def edges_between(self, src: int, dst: int) -> Tuple[int, ...]:
        """Ids of edges running src -> dst, ascending."""
        return self._pairs.get((src, dst), ())

    def incident_edges(self, node_id: int) -> Tuple[int, ...]:
        """Distinct incident edge ids of a node, ascending."""
        return tuple(sorted(set(self.out_edges[node_id]) | set(self.in_edges[node_id])))

    def node_label_names(self, node_id: int) -> List[str]:
        return self.node_vocab.names(self.nodes[node_id].labels)

    def edge_label_names(self, edge_id: int) -> List[str]:
        return self.edge_vocab.names(self.edges[edge_id].labels)

    def node_specs(self) -> List[NodeSpec]:
        return [(n.id, self.node_label_names(n.id)) for n in self.nodes]

    def edge_specs(self) -> List[EdgeSpec]:
        return [(e.id, e.src, e.dst, self.edge_label_names(e.id)) for e in self.edges]

    def undirected_neighbors(self, node_id: int) -> List[int]:
        return sorted({entry.other for entry in self.adjacency[node_id]})

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|V|={self.node_count}, |E|={self.edge_count})"


class QueryGraph(Graph):
    """Weakly connected pattern graph with a designated starting node."""

    def __init__(self, nodes: Sequence[Node], edges: Sequence[Edge],
                 node_vocab: LabelVocabulary, edge_vocab: LabelVocabulary, start_node: int):
        super().__init__(nodes, edges, node_vocab, edge_vocab)
        if not self.nodes:
            raise EmptyQueryError()
        if not self.has_node(start_node):
            raise InvalidStartError(start_node)
        components = self.component_count()
        if components != 1:
            raise DisconnectedQueryError(components)
        self.start_node = start_node

    def component_count(self) -> int:
        seen = [False] * self.node_count
        components = 0
        for root in range(self.node_count):
            if seen[root]:
                continue
            components += 1
            seen[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for entry in self.adjacency[v]:
                    if not seen[entry.other]:
                        seen[entry.other] = True
                        queue.append(entry.other)
        return components

    def cyclomatic_number(self) -> int:
        """Independent undirected cycles: |E| - |V| + 1 for a connected query."""
        return self.edge_count - self.node_count + 1

    def is_path(self) -> bool:
        """True for a single directed path (a lone node counts as a path)."""
        if self.cyclomatic_number() != 0:
            return False
        return all(len(self.out_edges[v]) <= 1 and len(self.in_edges[v]) <= 1
                   for v in range(self.node_count))


def _check_dense(kind: str, ids: Sequence[int]) -> None:
    seen = set()
    for item_id in ids:
        if item_id in seen:
            raise DuplicateIdError(kind, item_id)
        seen.add(item_id)
    for item_id in sorted(ids):
        if item_id < 0 or item_id >= len(ids):
            raise NonDenseIdsError(kind, item_id)


def _assemble(nodes: Sequence[NodeSpec], edges: Sequence[EdgeSpec]):
    _check_dense("node", [int(n[0]) for n in nodes])
    _check_dense("edge", [int(e[0]) for e in edges])

    node_vocab = LabelVocabulary()
    edge_vocab = LabelVocabulary()
    node_count = len(nodes)

    built_nodes = [Node(int(node_id), frozenset(node_vocab.intern(l) for l in sorted(set(labels))))
                   for node_id, labels in sorted(nodes, key=lambda n: int(n[0]))]
    built_edges = []
    for edge_id, src, dst, labels in sorted(edges, key=lambda e: int(e[0])):
        for endpoint in (src, dst):
            if not 0 <= int(endpoint) < node_count:
                raise DanglingEndpointError(int(edge_id), int(endpoint))
        built_edges.append(Edge(int(edge_id), int(src), int(dst),
                                frozenset(edge_vocab.intern(l) for l in sorted(set(labels)))))
    return built_nodes, built_edges, node_vocab, edge_vocab


def build_graph(nodes: Sequence[NodeSpec], edges: Sequence[EdgeSpec]) -> Graph:
    """
    Build an immutable Graph with all indexes populated.

    Args:
        nodes: (id, labels) pairs; ids dense from 0
        edges: (id, src, dst, labels) tuples; ids dense from 0

    Returns:
        Graph

    Raises:
        DuplicateIdError, NonDenseIdsError, DanglingEndpointError
    """
    built_nodes, built_edges, node_vocab, edge_vocab = _assemble(nodes, edges)
    graph = Graph(built_nodes, built_edges, node_vocab, edge_vocab)
    logger.debug(f"[Graph] Built graph |V|={graph.node_count} |E|={graph.edge_count}")
    return graph


def build_query(nodes: Sequence[NodeSpec], edges: Sequence[EdgeSpec],
                start: Optional[int] = None) -> QueryGraph:
    """
    Build a validated QueryGraph.

    Args:
        nodes: (id, labels) pairs
        edges: (id, src, dst, labels) tuples
        start: starting node; defaults to the smallest node id

    Raises:
        EmptyQueryError, DisconnectedQueryError, InvalidStartError and
        every error of build_graph
    """
    built_nodes, built_edges, node_vocab, edge_vocab = _assemble(nodes, edges)
    if start is None:
        start = 0
    return QueryGraph(built_nodes, built_edges, node_vocab, edge_vocab, int(start))


def degree_signature(g: Graph, v: int) -> DegreeSignature:
    """Degree signature of node v, recomputed from the graph's count arrays."""
    if not g.has_node(v):
        raise UnknownNodeError(v)
    counts = {}
    label_ids, directions = np.nonzero(g.sig_counts[v])
    for label_id, direction in zip(label_ids.tolist(), directions.tolist()):
        counts[(label_id, Direction(direction))] = int(g.sig_counts[v, label_id, direction])
    totals = {Direction.OUTGOING: int(g.sig_totals[v, Direction.OUTGOING]),
              Direction.INCOMING: int(g.sig_totals[v, Direction.INCOMING])}
    return DegreeSignature(counts=counts, totals=totals)
