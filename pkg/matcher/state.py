# matcher/state.py
"""
Mutable search state of one BB-Graph run: the branching stack, the
bidirectional node and edge match maps, the embeddings found so far and
the instrumentation counters.

Backtracking uses an undo log instead of copying the stack and node map
at every level: snapshot() remembers the log length and restore() rolls
every push, pop and node match back to that point.
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

_PUSH = 0
_POP = 1
_NODE = 2


@dataclass
class SearchCounters:
    """Instrumentation for one search (or an aggregate of several)."""
    max_depth: int = 0
    live_candidate_cells: int = 0
    peak_candidate_cells: int = 0
    checks: int = 0
    backtracks: int = 0
    branchings: int = 0
    start_candidates: int = 0
    embeddings: int = 0

    def merge(self, other: "SearchCounters") -> None:
        """Fold another run's counters in: sums for totals, max for peaks."""
        self.max_depth = max(self.max_depth, other.max_depth)
        self.peak_candidate_cells = max(self.peak_candidate_cells, other.peak_candidate_cells)
        self.live_candidate_cells += other.live_candidate_cells
        self.checks += other.checks
        self.backtracks += other.backtracks
        self.branchings += other.branchings
        self.start_candidates += other.start_candidates
        self.embeddings += other.embeddings

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


class StateSnapshot(NamedTuple):
    """Opaque restore point: length of the undo log when taken."""
    log_length: int


class MatchState:
    """Stack S, V_matched and E_matched of the search, plus found embeddings."""

    def __init__(self, limit: Optional[int] = None):
        self.stack: List[Tuple[int, int]] = []
        self.q2g: Dict[int, int] = {}
        self.g2q: Dict[int, int] = {}
        self.eq2g: Dict[int, int] = {}
        self.eg2q: Dict[int, int] = {}
        self.found: List[Any] = []
        self.limit = limit
        self.counters = SearchCounters()
        self._undo: List[tuple] = []

    def reset(self) -> None:
        """Clear the temporary storage; found embeddings and counters are kept."""
        self.stack.clear()
        self.q2g.clear()
        self.g2q.clear()
        self.eq2g.clear()
        self.eg2q.clear()
        self._undo.clear()

    @property
    def halted(self) -> bool:
        return self.limit is not None and len(self.found) >= self.limit

    def is_empty(self) -> bool:
        return not (self.stack or self.q2g or self.g2q or self.eq2g or self.eg2q)

    def push(self, u: int, u_prime: int) -> None:
        self.stack.append((u, u_prime))
        self._undo.append((_PUSH,))

    def pop(self) -> Tuple[int, int]:
        pair = self.stack.pop()
        self._undo.append((_POP, pair))
        return pair

    def match_nodes(self, u: int, u_prime: int) -> None:
        self.q2g[u] = u_prime
        self.g2q[u_prime] = u
        self._undo.append((_NODE, u, u_prime))

    def match_edge(self, r: int, r_prime: int) -> None:
        self.eq2g[r] = r_prime
        self.eg2q[r_prime] = r

    def unmatch_edge(self, r: int, r_prime: int) -> None:
        del self.eq2g[r]
        del self.eg2q[r_prime]

    def snapshot(self) -> StateSnapshot:
        return StateSnapshot(len(self._undo))

    def restore(self, snapshot: StateSnapshot) -> None:
        """Undo every stack and node-map change made since snapshot."""
        undo = self._undo
        while len(undo) > snapshot.log_length:
            op = undo.pop()
            kind = op[0]
            if kind == _PUSH:
                self.stack.pop()
            elif kind == _POP:
                self.stack.append(op[1])
            else:
                del self.q2g[op[1]]
                del self.g2q[op[2]]

    def logical_content(self) -> Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...]]:
        """Stack and V_matched as comparable values (what a snapshot covers)."""
        return tuple(self.stack), tuple(sorted(self.q2g.items()))
