# Matcher Module
# BB-Graph branch-and-bound search with backtracking

from .bb_graph import BBGraphMatcher, MatchResult, candidates_for_start, choose_start, match_all
from .embedding import Embedding, embedding_violation, validate_embeddings
from .state import MatchState, SearchCounters, StateSnapshot

__all__ = [
    'BBGraphMatcher', 'MatchResult', 'candidates_for_start', 'choose_start', 'match_all',
    'Embedding', 'embedding_violation', 'validate_embeddings',
    'MatchState', 'SearchCounters', 'StateSnapshot',
]
