# data_models/models.py
"""
Data models and type definitions shared by the matcher, baselines,
generator, benchmark and command line.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from graph_core.errors import ValidationError


class StartStrategy(str, Enum):
    """How the starting query node is chosen."""
    FIRST_NODE = "first"
    RAREST_LABEL = "rarest"


@dataclass(frozen=True)
class SearchConfig:
    """Per-run search options."""
    start_strategy: StartStrategy = StartStrategy.FIRST_NODE
    result_limit: Optional[int] = None
    collect_counters: bool = False
    workers: int = 1
    # absolute time.perf_counter() value; None = no deadline
    deadline: Optional[float] = None

    def __post_init__(self):
        if self.result_limit is not None and self.result_limit <= 0:
            raise ValidationError(f"result_limit must be positive, got {self.result_limit}", "SearchConfig")
        if self.workers < 1:
            raise ValidationError(f"workers must be >= 1, got {self.workers}", "SearchConfig")


@dataclass(frozen=True)
class OracleBudget:
    max_mappings_explored: int = 5_000_000

    def __post_init__(self):
        if self.max_mappings_explored <= 0:
            raise ValidationError("max_mappings_explored must be positive", "OracleBudget")


class LabelDistribution(str, Enum):
    UNIFORM = "uniform"
    ZIPF = "zipf"


@dataclass(frozen=True)
class GenSpec:
    """Synthetic graph parameters; the same spec always yields the same document."""
    node_count: int
    edge_count: int
    node_label_alphabet: int = 14
    edge_label_alphabet: int = 18
    label_distribution: LabelDistribution = LabelDistribution.UNIFORM
    zipf_exponent: float = 1.2
    seed: int = 0
    allow_self_loops: bool = False
    allow_parallel_edges: bool = True


class QueryKind(str, Enum):
    PATH = "path"
    COMPLEX = "complex"


@dataclass(frozen=True)
class WorkloadSpec:
    """
    Query extraction parameters.

    PATH uses path_length nodes; COMPLEX uses nodes plus extra_edges
    edges beyond a spanning tree; at least one, so every complex query
    has a cycle.
    """
    query_kind: QueryKind = QueryKind.PATH
    path_length: int = 5
    nodes: int = 4
    extra_edges: int = 1
    count: int = 1
    seed: int = 0
    perturb: bool = False
    max_retries: int = 500


@dataclass
class SearchSettings:
    start_strategy: str = "first"
    collect_counters: bool = False
    workers: int = 1
    result_limit: Optional[int] = None


@dataclass
class OracleSettings:
    max_mappings_explored: int = 5_000_000


@dataclass
class BenchSettings:
    repetitions: int = 10
    timeout_sec: float = 1800.0
    matchers: List[str] = field(default_factory=lambda: ["bbgraph", "global"])
    workers: int = 1


@dataclass
class GeneratorSettings:
    node_label_alphabet: int = 14
    edge_label_alphabet: int = 18
    zipf_exponent: float = 1.2


@dataclass
class OutputSettings:
    dedup_subgraphs: bool = False


@dataclass
class ProgramSettings:
    """Main program configuration settings."""
    log_level: str = "INFO"
    log_to_file: bool = False
    use_colors: bool = False
    search: SearchSettings = field(default_factory=SearchSettings)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    bench: BenchSettings = field(default_factory=BenchSettings)
    generator: GeneratorSettings = field(default_factory=GeneratorSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    @classmethod
    def from_dict(cls, data: dict) -> "ProgramSettings":
        """Create ProgramSettings from dictionary."""
        return cls(
            log_level=data.get("log_level", "INFO"),
            log_to_file=data.get("log_to_file", False),
            use_colors=data.get("use_colors", False),
            search=SearchSettings(**data.get("search", {})),
            oracle=OracleSettings(**data.get("oracle", {})),
            bench=BenchSettings(**data.get("bench", {})),
            generator=GeneratorSettings(**data.get("generator", {})),
            output=OutputSettings(**data.get("output", {})),
        )

    def search_config(self, **overrides) -> SearchConfig:
        """
        SearchConfig built from the search section, with keyword overrides.

        Raises:
            ValidationError: unknown start strategy or out-of-range values
        """
        try:
            strategy = StartStrategy(self.search.start_strategy)
        except ValueError as e:
            choices = ", ".join(s.value for s in StartStrategy)
            raise ValidationError(f"search.start_strategy must be one of {choices}, "
                                  f"got {self.search.start_strategy!r}", "settings") from e
        values = dict(
            start_strategy=strategy,
            result_limit=self.search.result_limit,
            collect_counters=self.search.collect_counters,
            workers=self.search.workers,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SearchConfig(**values)
