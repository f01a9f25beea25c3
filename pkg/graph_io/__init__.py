# Graph IO Module
# JSON graph/query/workload/result documents, CSV import and benchmark reports

from .documents import (
    GraphDocument, QueryDocument, WorkloadDocument, WorkloadEntry,
    load_csv_graph, load_graph, load_graph_document, load_query, load_query_document,
    load_workload, save_graph, write_document,
)
from .results import (
    REPORT_COLUMNS, ResultDocument, dedup_by_subgraph, read_results, write_report, write_results,
)

__all__ = [
    'GraphDocument', 'QueryDocument', 'WorkloadDocument', 'WorkloadEntry',
    'load_csv_graph', 'load_graph', 'load_graph_document', 'load_query', 'load_query_document',
    'load_workload', 'save_graph', 'write_document',
    'REPORT_COLUMNS', 'ResultDocument', 'dedup_by_subgraph', 'read_results', 'write_report', 'write_results',
]
