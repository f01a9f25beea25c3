# benchmark/workload.py
"""
Query workloads extracted from a database graph.

Path queries copy a random directed walk over distinct nodes; complex
queries copy the induced edges of a connected node set grown around a
short cycle. Labels come from the graph, so every unperturbed query has
at least one embedding.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from data_models.models import QueryKind, WorkloadSpec
from graph_core.errors import ExtractionFailedError, InfeasibleSpecError
from graph_core.graph import Graph
from graph_io.documents import QueryDocument, WorkloadDocument, WorkloadEntry

logger = logging.getLogger(__name__)

# BFS radius when looking for a seed cycle
CYCLE_SEARCH_DEPTH = 3


def _check_spec(spec: WorkloadSpec) -> None:
    kind = QueryKind(spec.query_kind)
    if kind is QueryKind.PATH and spec.path_length < 1:
        raise InfeasibleSpecError(f"path_length must be >= 1, got {spec.path_length}", "WorkloadSpec")
    if kind is QueryKind.COMPLEX and (spec.nodes < 1 or spec.extra_edges < 0):
        raise InfeasibleSpecError("complex queries need nodes >= 1 and extra_edges >= 0", "WorkloadSpec")
    if spec.count < 1 or spec.max_retries < 1:
        raise InfeasibleSpecError("count and max_retries must be positive", "WorkloadSpec")


def _copy_subgraph(g: Graph, node_order: Sequence[int], edge_ids: Sequence[int]) -> QueryDocument:
    """Relabel the chosen database nodes 0..k-1 in node_order and copy labels."""
    local = {v: i for i, v in enumerate(node_order)}
    nodes = [{"id": i, "labels": g.node_label_names(v)} for i, v in enumerate(node_order)]
    edges = []
    for i, e in enumerate(edge_ids):
        edge = g.edges[e]
        edges.append({"id": i, "src": local[edge.src], "dst": local[edge.dst],
                      "labels": g.edge_label_names(e)})
    return QueryDocument(nodes=nodes, edges=edges, start=0)


def _random_path(g: Graph, length: int, rng: np.random.Generator) -> Optional[Tuple[List[int], List[int]]]:
    v = int(rng.integers(g.node_count))
    path, edges = [v], []
    visited = {v}
    while len(path) < length:
        options = [e for e in g.out_edges[path[-1]] if g.edges[e].dst not in visited]
        if not options:
            return None
        e = options[int(rng.integers(len(options)))]
        v = g.edges[e].dst
        path.append(v)
        edges.append(e)
        visited.add(v)
    return path, edges


def _seed_cycle(g: Graph, root: int, max_nodes: int) -> Optional[List[int]]:
    """
    Nodes of a short undirected cycle reachable from root, plus the tree
    paths joining it to root. A non-tree edge closes the cycle; parallel
    edges and self-loops count.
    """
    parent: Dict[int, Tuple[int, int]] = {root: (-1, -1)}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        if depth[x] >= CYCLE_SEARCH_DEPTH:
            continue
        for entry in g.adjacency[x]:
            w = entry.other
            if w not in parent:
                parent[w] = (x, entry.edge)
                depth[w] = depth[x] + 1
                queue.append(w)
            elif entry.edge != parent[x][1]:
                nodes = set()
                for end in (x, w):
                    while end != -1:
                        nodes.add(end)
                        end = parent[end][0]
                if len(nodes) <= max_nodes:
                    return sorted(nodes, key=lambda v: depth[v])
    return None


def _random_complex(g: Graph, size: int, rng: np.random.Generator) -> Optional[List[int]]:
    root = int(rng.integers(g.node_count))
    chosen = _seed_cycle(g, root, size) if size > 1 else [root]
    if chosen is None:
        chosen = [root]
    members = set(chosen)
    while len(chosen) < size:
        frontier = sorted({entry.other for v in chosen for entry in g.adjacency[v]} - members)
        if not frontier:
            return None
        v = frontier[int(rng.integers(len(frontier)))]
        chosen.append(v)
        members.add(v)
    return chosen


def _induced_edges(g: Graph, nodes: Sequence[int]) -> List[int]:
    members = set(nodes)
    return sorted({e for v in nodes for e in g.out_edges[v] if g.edges[e].dst in members})


def _perturb(query: QueryDocument, extra: int, edge_label_names: Sequence[str],
             rng: np.random.Generator) -> QueryDocument:
    """Add edges that were not copied from the graph, so the query may no longer embed."""
    n = len(query.nodes)
    edges = list(query.edges)
    for _ in range(extra):
        src, dst = int(rng.integers(n)), int(rng.integers(n))
        labels = [edge_label_names[int(rng.integers(len(edge_label_names)))]] if edge_label_names else []
        edges.append({"id": len(edges), "src": src, "dst": dst, "labels": labels})
    return QueryDocument(nodes=query.nodes, edges=edges, start=query.start)


def extract_query(g: Graph, spec: WorkloadSpec, rng: Optional[np.random.Generator] = None) -> QueryDocument:
    """
    Extract one query from g.

    Args:
        g: database graph
        spec: query kind and size; spec.seed is used when rng is None
        rng: shared generator for multi-query workloads

    Returns:
        QueryDocument starting at node 0

    Raises:
        ExtractionFailedError: no suitable subgraph after spec.max_retries attempts
    """
    _check_spec(spec)
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    kind = QueryKind(spec.query_kind)
    if g.node_count == 0:
        raise ExtractionFailedError("cannot extract a query from an empty graph")

    query = None
    for _ in range(spec.max_retries):
        if kind is QueryKind.PATH:
            walk = _random_path(g, spec.path_length, rng)
            if walk is not None:
                query = _copy_subgraph(g, walk[0], walk[1])
        else:
            nodes = _random_complex(g, spec.nodes, rng)
            if nodes is not None:
                edge_ids = _induced_edges(g, nodes)
                # connected, so |E| - |V| + 1 independent cycles
                if len(edge_ids) >= spec.nodes - 1 + max(1, spec.extra_edges):
                    query = _copy_subgraph(g, nodes, edge_ids)
        if query is not None:
            break
    if query is None:
        raise ExtractionFailedError(
            f"no {kind.value} query found in {spec.max_retries} attempts (graph {g!r})")

    if spec.perturb:
        extra = spec.extra_edges if spec.extra_edges > 0 else 1
        query = _perturb(query, extra, g.edge_vocab.names(range(len(g.edge_vocab))), rng)
    return query


def extract_workload(g: Graph, spec: WorkloadSpec, graph_name: str = "") -> WorkloadDocument:
    """spec.count queries from one seeded generator, ids "<kind><index>"."""
    _check_spec(spec)
    rng = np.random.default_rng(spec.seed)
    kind = QueryKind(spec.query_kind)
    entries = [WorkloadEntry(f"{kind.value}{i}", kind.value, extract_query(g, spec, rng))
               for i in range(spec.count)]
    logger.info(f"[Workload] Extracted {len(entries)} {kind.value} queries from {g!r}")
    return WorkloadDocument(graph=graph_name, queries=entries)
