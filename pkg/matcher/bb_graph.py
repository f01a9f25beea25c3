# matcher/bb_graph.py
"""
BB-Graph subgraph isomorphism search.

For every database candidate of the starting query node the search grows
a match locally: a matched pair <u, u'> is popped from the stack, the
non-matched query edges of u are paired with compatible incident edges of
u' one level at a time (reciprocal node branching), newly reached end
points are checked and pushed, and every combination is backtracked so
that all exact matches are found.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

from data_models.models import SearchConfig, StartStrategy
from graph_core.errors import SearchTimeoutError
from graph_core.graph import Graph, QueryGraph
from graph_core.principals import BoundQuery, bind_query

from .embedding import Embedding
from .state import MatchState, SearchCounters, StateSnapshot

logger = logging.getLogger(__name__)

# deadline is polled once per this many checks
_DEADLINE_POLL = 1024


@dataclass
class MatchResult:
    """Embeddings in discovery order, plus counters when requested."""
    embeddings: List[Embedding]
    start_node: int
    start_candidates: List[int]
    counters: Optional[SearchCounters] = None
    elapsed_sec: float = 0.0

    def __len__(self) -> int:
        return len(self.embeddings)

    def __iter__(self):
        return iter(self.embeddings)


class _Level:
    """
    One level of a reciprocal node branching: query edge edges[i] is being
    paired with the entries of candidate_lists[i], starting at position.
    """

    __slots__ = ("edges", "candidate_lists", "u", "u_prime", "i", "depth", "cells",
                 "position", "matched", "snapshot")

    def __init__(self, edges: Sequence[int], candidate_lists: Sequence[Sequence[int]],
                 u: int, u_prime: int, i: int, depth: int, cells: int = 0):
        self.edges = edges
        self.candidate_lists = candidate_lists
        self.u = u
        self.u_prime = u_prime
        self.i = i
        self.depth = depth
        # candidate-list cells released when this level closes
        self.cells = cells
        self.position = 0
        self.matched: Optional[int] = None
        self.snapshot: Optional[StateSnapshot] = None

    def next_level(self) -> "_Level":
        return _Level(self.edges, self.candidate_lists, self.u, self.u_prime, self.i + 1, self.depth + 1)


def choose_start(q: QueryGraph, strategy: StartStrategy, g: Graph) -> int:
    """
    Pick the starting query node.

    FIRST_NODE returns q.start_node. RAREST_LABEL returns the node with
    the fewest database nodes carrying all of its labels, ties broken by
    smallest id.
    """
    if StartStrategy(strategy) is StartStrategy.FIRST_NODE:
        return q.start_node
    binding = bind_query(q, g)
    return min(range(q.node_count), key=lambda u: (binding.estimated_candidates(u), u))


def candidates_for_start(q: QueryGraph, u_start: int, g: Graph) -> List[int]:
    """Database nodes passing mnp against u_start, ascending by id."""
    binding = bind_query(q, g)
    pool = binding.candidate_pool(u_start)
    return sorted(binding.filter_nodes(u_start, pool).tolist())


class BBGraphMatcher:
    """One query bound to one database graph; match_all() runs the search."""

    def __init__(self, q: QueryGraph, g: Graph, config: Optional[SearchConfig] = None):
        self.q = q
        self.g = g
        self.config = config or SearchConfig()
        self.binding: BoundQuery = bind_query(q, g)
        self._query_incident = [q.incident_edges(u) for u in range(q.node_count)]
        self._query_edges = q.edges
        self._db_edges = g.edges

    def match_all(self) -> MatchResult:
        """
        Find every embedding of the query in the database.

        Returns:
            MatchResult with embeddings in deterministic discovery order

        Raises:
            SearchTimeoutError: config.deadline passed before the search finished
        """
        started = time.perf_counter()
        u_start = choose_start(self.q, self.config.start_strategy, self.g)
        start_candidates = candidates_for_start(self.q, u_start, self.g)
        logger.debug(f"[BBGraph] Start node u{u_start}: {len(start_candidates)} candidates")

        if self.config.workers > 1 and len(start_candidates) > 1:
            embeddings, counters = self._match_parallel(u_start, start_candidates)
        else:
            state = MatchState(limit=self.config.result_limit)
            for u_prime in start_candidates:
                if state.halted:
                    break
                self.search_from(state, u_start, u_prime)
            embeddings, counters = state.found, state.counters

        elapsed = time.perf_counter() - started
        logger.info(f"[BBGraph] Found {len(embeddings)} embeddings "
                    f"(|V_Q|={self.q.node_count}, |E_Q|={self.q.edge_count}) in {elapsed:.4f}s")
        return MatchResult(
            embeddings=embeddings,
            start_node=u_start,
            start_candidates=start_candidates,
            counters=counters if self.config.collect_counters else None,
            elapsed_sec=elapsed,
        )

    def _match_parallel(self, u_start: int, start_candidates: Sequence[int]):
        def run(u_prime: int) -> MatchState:
            state = MatchState(limit=self.config.result_limit)
            self.search_from(state, u_start, u_prime)
            return state

        with ThreadPoolExecutor(max_workers=self.config.workers, thread_name_prefix="BBGraph") as pool:
            states = list(pool.map(run, start_candidates))

        embeddings: List[Embedding] = []
        counters = SearchCounters()
        for state in states:
            embeddings.extend(state.found)
            counters.merge(state.counters)
        if self.config.result_limit is not None:
            embeddings = embeddings[:self.config.result_limit]
        counters.embeddings = len(embeddings)
        return embeddings, counters

    def search_from(self, state: MatchState, u_start: int, u_prime: int) -> None:
        """Reset the temporary storage, seed <u_start, u_prime> and search."""
        state.reset()
        seed = state.snapshot()
        state.counters.start_candidates += 1
        state.match_nodes(u_start, u_prime)
        state.push(u_start, u_prime)
        self.search(state, 1)
        state.restore(seed)

    def search(self, state: MatchState, depth: int) -> None:
        """
        Search from the current stack until every combination is exhausted.

        Open branching levels are kept on an explicit frame stack; the query
        size never bounds the Python call depth.
        """
        counters = state.counters
        frames: List[_Level] = []
        try:
            self._descend(state, frames, depth)
            while frames:
                level = frames[-1]
                if level.matched is not None:
                    state.unmatch_edge(level.edges[level.i], level.matched)
                    state.restore(level.snapshot)
                    counters.backtracks += 1
                    level.matched = None
                if not self.match_relationship(state, level):
                    frames.pop()
                    counters.live_candidate_cells -= level.cells
                elif level.i + 1 == len(level.edges):
                    self._descend(state, frames, level.depth + 1)
                else:
                    frames.append(level.next_level())
                    self._track_depth(counters, level.depth + 1)
        finally:
            for level in frames:
                counters.live_candidate_cells -= level.cells

    def _descend(self, state: MatchState, frames: List[_Level], depth: int) -> None:
        """Pop pairs until an embedding is recorded or a branching level is opened."""
        eq2g = state.eq2g
        while True:
            self._track_depth(state.counters, depth)
            if not state.stack:
                self._record(state)
                return
            u, u_prime = state.pop()
            depth += 1
            if any(r not in eq2g for r in self._query_incident[u]):
                frames.append(self.branch_nodes(state, u, u_prime, depth))
                self._track_depth(state.counters, depth)
                return

    def branch_nodes(self, state: MatchState, u: int, u_prime: int, depth: int = 0) -> _Level:
        """
        Build a candidate list for every non-matched query edge of u among
        the incident edges of u' and open the first level over them.
        """
        eq2g = state.eq2g
        edges = [r for r in self._query_incident[u] if r not in eq2g]
        candidate_lists = [self.binding.edge_candidates(r, u, u_prime) for r in edges]

        counters = state.counters
        counters.branchings += 1
        cells = sum(len(c) for c in candidate_lists)
        counters.live_candidate_cells += cells
        if counters.live_candidate_cells > counters.peak_candidate_cells:
            counters.peak_candidate_cells = counters.live_candidate_cells
        return _Level(edges, candidate_lists, u, u_prime, 0, depth, cells)

    def match_relationship(self, state: MatchState, level: _Level) -> bool:
        """
        Move level to its next non-matched candidate r'_i that passes check().

        The snapshot is taken before check() so the end-point pair it may
        push is undone together with the edge match. Returns False when the
        candidates are exhausted or the result limit is reached.
        """
        r = level.edges[level.i]
        candidates = level.candidate_lists[level.i]
        eg2q = state.eg2q
        while level.position < len(candidates):
            if state.halted:
                return False
            r_prime = candidates[level.position]
            level.position += 1
            if r_prime in eg2q:
                continue
            snapshot = state.snapshot()
            if self.check(state, r, r_prime, level.u, level.u_prime):
                state.match_edge(r, r_prime)
                level.matched = r_prime
                level.snapshot = snapshot
                return True
        return False

    def check(self, state: MatchState, r: int, r_prime: int, u: int, u_prime: int) -> bool:
        """
        End-point conflict check for the prospective match <r, r'>.

        v / v' are the end points of r / r' other than u / u' (the anchor
        itself for a self-loop). A conflict is a match of either one to a
        different partner. When both are free, mnp decides and on success
        <v, v'> is matched and pushed.
        """
        counters = state.counters
        counters.checks += 1
        if counters.checks % _DEADLINE_POLL == 0:
            self._check_deadline()

        v = self._query_edges[r].other(u)
        v_prime = self._db_edges[r_prime].other(u_prime)
        partner_q = state.g2q.get(v_prime)
        if partner_q is not None and partner_q != v:
            return False
        partner_g = state.q2g.get(v)
        if partner_g is not None:
            return partner_g == v_prime
        if self.binding.node_matches(v, v_prime):
            state.match_nodes(v, v_prime)
            state.push(v, v_prime)
            return True
        return False

    @staticmethod
    def _track_depth(counters: SearchCounters, depth: int) -> None:
        if depth > counters.max_depth:
            counters.max_depth = depth

    def _record(self, state: MatchState) -> None:
        q2g, eq2g = state.q2g, state.eq2g
        embedding = Embedding(tuple(q2g[u] for u in range(self.q.node_count)),
                              tuple(eq2g[r] for r in range(self.q.edge_count)))
        state.found.append(embedding)
        state.counters.embeddings += 1

    def _check_deadline(self) -> None:
        deadline = self.config.deadline
        if deadline is not None and time.perf_counter() > deadline:
            raise SearchTimeoutError("BB-Graph search exceeded its deadline")


def match_all(q: QueryGraph, g: Graph, config: Optional[SearchConfig] = None) -> MatchResult:
    """Run BB-Graph for q on g; see BBGraphMatcher.match_all."""
    return BBGraphMatcher(q, g, config).match_all()
