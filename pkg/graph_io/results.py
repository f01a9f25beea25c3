# graph_io/results.py
"""
Result documents (embeddings plus run metadata) and benchmark reports.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

from graph_core.errors import ParseError
from matcher.embedding import Embedding
from utils.file_utils import FileUtils

logger = logging.getLogger(__name__)

# tab-separated report columns, one row per (query, matcher) cell
REPORT_COLUMNS = [
    "query", "graph", "|V_Q|", "|E_Q|", "matcher",
    "mean_seconds", "embedding_count", "status", "agreement",
]
_CELL_KEYS = [
    "query", "graph", "query_nodes", "query_edges", "matcher",
    "mean_seconds", "embedding_count", "status", "agreement",
]


def _id_map(values: Sequence[int]) -> Dict[str, int]:
    return {str(i): v for i, v in enumerate(values)}


@dataclass
class ResultDocument:
    """Embeddings in emission order with the metadata of the run that produced them."""
    embeddings: List[Embedding] = field(default_factory=list)
    query_file: str = ""
    graph_file: str = ""
    matcher: str = "bbgraph"
    elapsed_ms: Optional[float] = None
    counters: Optional[Dict[str, int]] = None

    @property
    def embedding_count(self) -> int:
        return len(self.embeddings)

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        metadata: Dict[str, Any] = {
            "query_file": self.query_file,
            "graph_file": self.graph_file,
            "matcher": self.matcher,
        }
        if include_timing:
            metadata["elapsed_ms"] = self.elapsed_ms
        metadata["embedding_count"] = self.embedding_count
        metadata["counters"] = self.counters
        return {
            "metadata": metadata,
            "embeddings": [{"nodes": _id_map(e.node_map), "edges": _id_map(e.edge_map)}
                           for e in self.embeddings],
        }

    @classmethod
    def from_dict(cls, data: Any, path: Optional[str] = None) -> "ResultDocument":
        if not isinstance(data, dict) or not isinstance(data.get("embeddings", []), list):
            raise ParseError("result document must be an object with an 'embeddings' array", path=path)
        metadata = data.get("metadata")
        if metadata is None:
            metadata = {}
        elif not isinstance(metadata, dict):
            raise ParseError("result 'metadata' must be an object", path=path)
        embeddings = [_parse_embedding(item, i, path) for i, item in enumerate(data.get("embeddings", []))]
        return cls(
            embeddings=embeddings,
            query_file=str(metadata.get("query_file", "")),
            graph_file=str(metadata.get("graph_file", "")),
            matcher=str(metadata.get("matcher", "")),
            elapsed_ms=metadata.get("elapsed_ms"),
            counters=metadata.get("counters"),
        )


def _parse_id_map(raw: Any, what: str, path: Optional[str]) -> List[int]:
    if not isinstance(raw, dict):
        raise ParseError(f"{what} must be an object of id -> id", path=path)
    try:
        pairs = {int(k): v for k, v in raw.items()}
    except ValueError as e:
        raise ParseError(f"{what} has a non-integer key: {e}", path=path) from e
    if any(isinstance(v, bool) or not isinstance(v, int) for v in pairs.values()):
        raise ParseError(f"{what} values must be integers", path=path)
    if not pairs:
        return []
    # gaps become -1 so the validator reports them as unknown targets
    return [pairs.get(k, -1) for k in range(max(pairs) + 1)]


def _parse_embedding(item: Any, index: int, path: Optional[str]) -> Embedding:
    if not isinstance(item, dict):
        raise ParseError(f"embedding {index} must be an object", path=path)
    return Embedding(tuple(_parse_id_map(item.get("nodes", {}), f"embedding {index} nodes", path)),
                     tuple(_parse_id_map(item.get("edges", {}), f"embedding {index} edges", path)))


def write_results(results: ResultDocument, path: str) -> None:
    """
    Write a ResultDocument; bytes depend only on its content.

    Raises:
        GraphIOError: path cannot be written
    """
    FileUtils.write_json(results.to_dict(), path)
    logger.info(f"[GraphIO] Wrote {results.embedding_count} embeddings to {path}")


def read_results(path: str) -> ResultDocument:
    """
    Raises:
        GraphIOError, ParseError
    """
    return ResultDocument.from_dict(FileUtils.read_json(path), path)


def dedup_by_subgraph(embeddings: Sequence[Embedding]) -> List[Embedding]:
    """First embedding per distinct matched (node set, edge set); automorphic duplicates collapse."""
    seen = set()
    unique = []
    for embedding in embeddings:
        key = embedding.subgraph_key()
        if key not in seen:
            seen.add(key)
            unique.append(embedding)
    return unique


def report_rows(report: Mapping[str, Any]) -> List[List[Any]]:
    rows = []
    for cell in report.get("cells", []):
        row = [cell.get(key) for key in _CELL_KEYS]
        if row[5] is not None:
            row[5] = f"{row[5]:.6f}"
        row[8] = "true" if row[8] else "false"
        rows.append(["" if value is None else value for value in row])
    return rows


def write_report(report: Mapping[str, Any], path: str) -> str:
    """
    Write a benchmark report as JSON at path plus a tab-separated table next to it.

    Args:
        report: BenchResult.to_dict() output; its "cells" feed the table
        path: JSON destination; the table goes to the same name with '.tsv'

    Returns:
        Path of the table file

    Raises:
        GraphIOError: either file cannot be written
    """
    if path.endswith(".tsv"):
        table_path, path = path, FileUtils.sibling_path(path, ".json")
    else:
        table_path = FileUtils.sibling_path(path, ".tsv")
    FileUtils.write_json(dict(report), path)
    FileUtils.write_table(REPORT_COLUMNS, report_rows(report), table_path)
    logger.info(f"[GraphIO] Wrote report {path} and table {table_path}")
    return table_path
