# Graph Core Module
# Labeled multigraph model, degree signatures and matching principals

from .graph import (
    AdjacencyEntry, DegreeSignature, Direction, Edge, Graph, LabelVocabulary,
    Node, QueryGraph, build_graph, build_query, degree_signature,
)
from .principals import BoundQuery, bind_query, mnp, mrp
from . import errors

__all__ = [
    'AdjacencyEntry', 'DegreeSignature', 'Direction', 'Edge', 'Graph', 'LabelVocabulary',
    'Node', 'QueryGraph', 'build_graph', 'build_query', 'degree_signature',
    'BoundQuery', 'bind_query', 'mnp', 'mrp', 'errors',
]
