# benchmark/runners.py
"""
Uniform run interface over the three matchers.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from typing import Dict, List, Optional

from baselines.global_candidate import global_candidate_match
from baselines.oracle import oracle_enumerate
from data_models.models import OracleBudget, SearchConfig
from graph_core.errors import ValidationError
from graph_core.graph import Graph, QueryGraph
from matcher.bb_graph import BBGraphMatcher
from matcher.embedding import Embedding

logger = logging.getLogger(__name__)


@dataclass
class RunOutcome:
    embeddings: List[Embedding]
    counters: Optional[Dict[str, int]] = None


class BaseMatcherRunner(ABC):
    """Base class for all matcher runners."""

    name = ""

    def __init__(self, search_config: Optional[SearchConfig] = None,
                 oracle_budget: Optional[OracleBudget] = None):
        self.search_config = search_config or SearchConfig()
        self.oracle_budget = oracle_budget or OracleBudget()

    @abstractmethod
    def run(self, q: QueryGraph, g: Graph, deadline: Optional[float] = None) -> RunOutcome:
        """
        Find every embedding of q in g.

        Args:
            q: query graph
            g: database graph
            deadline: optional time.perf_counter() value

        Returns:
            RunOutcome with embeddings in the matcher's emission order

        Raises:
            SearchTimeoutError, BudgetExceededError
        """


class BBGraphRunner(BaseMatcherRunner):
    name = "bbgraph"

    def run(self, q: QueryGraph, g: Graph, deadline: Optional[float] = None) -> RunOutcome:
        config = replace(self.search_config, deadline=deadline) if deadline is not None else self.search_config
        result = BBGraphMatcher(q, g, config).match_all()
        counters = result.counters.to_dict() if result.counters is not None else None
        return RunOutcome(result.embeddings, counters)


class OracleRunner(BaseMatcherRunner):
    name = "oracle"

    def run(self, q: QueryGraph, g: Graph, deadline: Optional[float] = None) -> RunOutcome:
        return RunOutcome(oracle_enumerate(q, g, self.oracle_budget, deadline))


class GlobalCandidateRunner(BaseMatcherRunner):
    name = "global"

    def run(self, q: QueryGraph, g: Graph, deadline: Optional[float] = None) -> RunOutcome:
        return RunOutcome(global_candidate_match(q, g, deadline))


class MatcherFactory:
    """Factory for creating matcher runners."""

    RUNNERS = {
        BBGraphRunner.name: BBGraphRunner,
        OracleRunner.name: OracleRunner,
        GlobalCandidateRunner.name: GlobalCandidateRunner,
    }

    @staticmethod
    def available() -> List[str]:
        return list(MatcherFactory.RUNNERS)

    @staticmethod
    def create_runner(name: str, search_config: Optional[SearchConfig] = None,
                      oracle_budget: Optional[OracleBudget] = None) -> BaseMatcherRunner:
        """
        Create a runner by matcher name (bbgraph, oracle, global).

        Raises:
            ValidationError: unknown matcher name
        """
        runner_cls = MatcherFactory.RUNNERS.get(name.strip().lower())
        if runner_cls is None:
            raise ValidationError(
                f"unknown matcher {name!r}; expected one of {', '.join(MatcherFactory.available())}", "matcher")
        return runner_cls(search_config, oracle_budget)

    @staticmethod
    def parse_list(names: str) -> List[str]:
        """'bbgraph, global' -> ['bbgraph', 'global'], validated, order kept, duplicates dropped."""
        result: List[str] = []
        for name in names.split(','):
            name = name.strip().lower()
            if not name:
                continue
            if name not in MatcherFactory.RUNNERS:
                raise ValidationError(
                    f"unknown matcher {name!r}; expected one of {', '.join(MatcherFactory.available())}", "matcher")
            if name not in result:
                result.append(name)
        if not result:
            raise ValidationError("no matchers given", "matcher")
        return result
