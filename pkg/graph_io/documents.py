# graph_io/documents.py
"""
Graph, query and workload documents: JSON interchange formats plus a
minimal CSV edge-list import for third-party datasets.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from graph_core.errors import ParseError
from graph_core.graph import EdgeSpec, Graph, NodeSpec, QueryGraph, build_graph, build_query
from utils.file_utils import FileUtils

logger = logging.getLogger(__name__)


def _require_int(value: Any, what: str, path: Optional[str]) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}", path=path)
    return value


def _require_labels(value: Any, what: str, path: Optional[str]) -> List[str]:
    if value is None:
        return []
    if not isinstance(value, list) or not all(isinstance(l, str) for l in value):
        raise ParseError(f"{what} labels must be a list of strings", path=path)
    return sorted(set(value))


@dataclass
class GraphDocument:
    """{"nodes": [{id, labels}], "edges": [{id, src, dst, labels}]}, ids ascending, labels sorted."""
    nodes: List[Dict[str, Any]] = field(default_factory=list)
    edges: List[Dict[str, Any]] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: Any, path: Optional[str] = None) -> "GraphDocument":
        if not isinstance(data, dict):
            raise ParseError("document must be a JSON object", path=path)
        raw_nodes = data.get("nodes", [])
        raw_edges = data.get("edges", [])
        if not isinstance(raw_nodes, list) or not isinstance(raw_edges, list):
            raise ParseError("'nodes' and 'edges' must be arrays", path=path)
        nodes, edges = [], []
        for i, node in enumerate(raw_nodes):
            if not isinstance(node, dict) or "id" not in node:
                raise ParseError(f"node entry {i} must be an object with an 'id'", path=path)
            node_id = _require_int(node["id"], f"node entry {i} id", path)
            nodes.append({"id": node_id, "labels": _require_labels(node.get("labels"), f"node {node_id}", path)})
        for i, edge in enumerate(raw_edges):
            if not isinstance(edge, dict) or not {"id", "src", "dst"} <= edge.keys():
                raise ParseError(f"edge entry {i} must be an object with 'id', 'src' and 'dst'", path=path)
            edge_id = _require_int(edge["id"], f"edge entry {i} id", path)
            edges.append({
                "id": edge_id,
                "src": _require_int(edge["src"], f"edge {edge_id} src", path),
                "dst": _require_int(edge["dst"], f"edge {edge_id} dst", path),
                "labels": _require_labels(edge.get("labels"), f"edge {edge_id}", path),
            })
        nodes.sort(key=lambda n: n["id"])
        edges.sort(key=lambda e: e["id"])
        return cls(nodes=nodes, edges=edges)

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphDocument":
        return cls(
            nodes=[{"id": node_id, "labels": labels} for node_id, labels in g.node_specs()],
            edges=[{"id": e, "src": s, "dst": d, "labels": labels} for e, s, d, labels in g.edge_specs()],
        )

    def node_specs(self) -> List[NodeSpec]:
        return [(n["id"], n["labels"]) for n in self.nodes]

    def edge_specs(self) -> List[EdgeSpec]:
        return [(e["id"], e["src"], e["dst"], e["labels"]) for e in self.edges]

    def build(self) -> Graph:
        return build_graph(self.node_specs(), self.edge_specs())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nodes": [{"id": n["id"], "labels": sorted(n["labels"])} for n in sorted(self.nodes, key=lambda n: n["id"])],
            "edges": [{"id": e["id"], "src": e["src"], "dst": e["dst"], "labels": sorted(e["labels"])}
                      for e in sorted(self.edges, key=lambda e: e["id"])],
        }


@dataclass
class QueryDocument(GraphDocument):
    """GraphDocument plus an optional "start" node (defaults to the smallest id)."""
    start: Optional[int] = None

    @classmethod
    def from_dict(cls, data: Any, path: Optional[str] = None) -> "QueryDocument":
        base = GraphDocument.from_dict(data, path)
        start = data.get("start")
        if start is not None:
            start = _require_int(start, "start", path)
        return cls(nodes=base.nodes, edges=base.edges, start=start)

    @classmethod
    def from_query(cls, q: QueryGraph) -> "QueryDocument":
        base = GraphDocument.from_graph(q)
        return cls(nodes=base.nodes, edges=base.edges, start=q.start_node)

    def build(self) -> QueryGraph:
        start = self.start
        if start is None and self.nodes:
            start = min(n["id"] for n in self.nodes)
        return build_query(self.node_specs(), self.edge_specs(), start)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        if self.start is not None:
            data["start"] = self.start
        return data


@dataclass
class WorkloadEntry:
    id: str
    kind: str
    query: QueryDocument

    def to_dict(self) -> Dict[str, Any]:
        data = {"id": self.id, "kind": self.kind}
        data.update(self.query.to_dict())
        return data


@dataclass
class WorkloadDocument:
    """{"graph": str, "queries": [{"id", "kind", ...QueryDocument}]}."""
    graph: str = ""
    queries: List[WorkloadEntry] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: Any, path: Optional[str] = None) -> "WorkloadDocument":
        if not isinstance(data, dict):
            raise ParseError("workload must be a JSON object", path=path)
        if "queries" not in data:
            # a lone query document is a one-query workload
            query = QueryDocument.from_dict(data, path)
            return cls(graph="", queries=[WorkloadEntry(FileUtils.stem(path) or "q0", "query", query)])
        if not isinstance(data["queries"], list):
            raise ParseError("'queries' must be an array", path=path)
        entries = []
        for i, item in enumerate(data["queries"]):
            if not isinstance(item, dict):
                raise ParseError(f"workload entry {i} must be an object", path=path)
            entries.append(WorkloadEntry(str(item.get("id", f"q{i}")), str(item.get("kind", "query")),
                                         QueryDocument.from_dict(item, path)))
        return cls(graph=str(data.get("graph", "")), queries=entries)

    def to_dict(self) -> Dict[str, Any]:
        return {"graph": self.graph, "queries": [entry.to_dict() for entry in self.queries]}


def load_graph_document(path: str) -> GraphDocument:
    return GraphDocument.from_dict(FileUtils.read_json(path), path)


def load_query_document(path: str) -> QueryDocument:
    return QueryDocument.from_dict(FileUtils.read_json(path), path)


def load_graph(path: str) -> Graph:
    """
    Load and validate a database graph.

    Raises:
        GraphIOError, ParseError, ValidationError
    """
    g = load_graph_document(path).build()
    logger.info(f"[GraphIO] Loaded graph {path}: |V|={g.node_count} |E|={g.edge_count}")
    return g


def load_query(path: str) -> QueryGraph:
    """
    Load and validate a query graph; connectivity is enforced here.

    Raises:
        GraphIOError, ParseError, ValidationError (e.g. DisconnectedQueryError)
    """
    q = load_query_document(path).build()
    logger.info(f"[GraphIO] Loaded query {path}: |V|={q.node_count} |E|={q.edge_count} start={q.start_node}")
    return q


def load_workload(path: str) -> WorkloadDocument:
    return WorkloadDocument.from_dict(FileUtils.read_json(path), path)


def write_document(document, path: str) -> None:
    """Write a Graph/Query/Workload document deterministically."""
    FileUtils.write_json(document.to_dict(), path)


def save_graph(g: Graph, path: str) -> None:
    write_document(QueryDocument.from_query(g) if isinstance(g, QueryGraph) else GraphDocument.from_graph(g), path)


def _split_labels(cell: str) -> List[str]:
    return [l.strip() for l in cell.split(';') if l.strip()]


def load_csv_graph(edges_path: str, node_labels_path: Optional[str] = None) -> Graph:
    """
    Import a graph from a CSV edge list.

    Edge lines are "src,dst[,label[;label...]]" and edge ids follow line
    order. The optional sidecar holds "id,label[;label...]" lines. Node ids
    may be arbitrary integers; they are remapped densely in ascending order.

    Raises:
        GraphIOError, ParseError
    """
    raw_edges = []
    for line_no, row in FileUtils.read_rows(edges_path):
        if len(row) < 2:
            raise ParseError("expected src,dst[,labels]", path=edges_path, line=line_no)
        try:
            src, dst = int(row[0]), int(row[1])
        except ValueError as e:
            raise ParseError(f"non-integer endpoint: {e}", path=edges_path, line=line_no) from e
        raw_edges.append((src, dst, _split_labels(row[2]) if len(row) > 2 else []))

    node_labels: Dict[int, List[str]] = {}
    if node_labels_path:
        for line_no, row in FileUtils.read_rows(node_labels_path):
            try:
                node_labels[int(row[0])] = _split_labels(row[1]) if len(row) > 1 else []
            except ValueError as e:
                raise ParseError(f"non-integer node id: {e}", path=node_labels_path, line=line_no) from e

    external_ids = sorted(set(node_labels) | {s for s, _, _ in raw_edges} | {d for _, d, _ in raw_edges})
    dense = {ext: i for i, ext in enumerate(external_ids)}
    nodes = [(dense[ext], node_labels.get(ext, [])) for ext in external_ids]
    edges = [(i, dense[s], dense[d], labels) for i, (s, d, labels) in enumerate(raw_edges)]
    g = build_graph(nodes, edges)
    logger.info(f"[GraphIO] Imported CSV graph {edges_path}: |V|={g.node_count} |E|={g.edge_count}")
    return g
