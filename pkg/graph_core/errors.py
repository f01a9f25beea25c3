# graph_core/errors.py
"""
Exception hierarchy shared by every package of the matching engine.
"""

from typing import Optional


class GraphError(Exception):
    """Base class for all errors raised by the matching engine."""


class ValidationError(GraphError, ValueError):
    """A graph or query document violates a structural invariant."""

    invariant = "Validation"

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant


class DuplicateIdError(ValidationError):
    invariant = "DuplicateId"

    def __init__(self, kind: str, item_id: int):
        super().__init__(f"duplicate {kind} id {item_id}")
        self.kind = kind
        self.item_id = item_id


class NonDenseIdsError(ValidationError):
    invariant = "NonDenseIds"

    def __init__(self, kind: str, item_id: int):
        super().__init__(f"{kind} ids must be dense from 0; offending id {item_id}")
        self.kind = kind
        self.item_id = item_id


class DanglingEndpointError(ValidationError):
    invariant = "DanglingEndpoint"

    def __init__(self, edge_id: int, node_id: int):
        super().__init__(f"edge {edge_id} references missing node {node_id}")
        self.edge_id = edge_id
        self.item_id = node_id


class DisconnectedQueryError(ValidationError):
    invariant = "DisconnectedQuery"

    def __init__(self, components: int):
        super().__init__(f"query graph is not weakly connected ({components} components)")
        self.components = components


class EmptyQueryError(ValidationError):
    invariant = "EmptyQuery"

    def __init__(self):
        super().__init__("query graph has no nodes")


class InvalidStartError(ValidationError):
    invariant = "InvalidStart"

    def __init__(self, node_id: int):
        super().__init__(f"start node {node_id} is not a query node")
        self.item_id = node_id


class InfeasibleSpecError(ValidationError):
    invariant = "InfeasibleSpec"


class UnknownNodeError(GraphError, KeyError):
    def __init__(self, node_id: int):
        super().__init__(node_id)
        self.node_id = node_id

    def __str__(self) -> str:
        return f"unknown node {self.node_id}"


class EdgeNotIncidentError(GraphError, ValueError):
    def __init__(self, edge_id: int, node_id: int):
        super().__init__(f"edge {edge_id} is not incident to node {node_id}")
        self.edge_id = edge_id
        self.node_id = node_id


class ParseError(GraphError):
    """Malformed document; carries the position when the decoder knows it."""

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        where = path or "<input>"
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line
        self.column = column


class GraphIOError(GraphError, OSError):
    pass


class BudgetExceededError(GraphError):
    def __init__(self, budget: int):
        super().__init__(f"oracle budget of {budget} mapping extensions exceeded")
        self.budget = budget


class SearchTimeoutError(GraphError):
    pass


class ExtractionFailedError(GraphError):
    pass


class InvalidEmbeddingError(GraphError):
    def __init__(self, index: int, clause: str):
        super().__init__(f"embedding {index} is invalid: {clause}")
        self.index = index
        self.clause = clause
