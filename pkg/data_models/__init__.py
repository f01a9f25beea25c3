# Data Models Module
# Search, generator, workload and settings types

from .models import (
    BenchSettings, GeneratorSettings, GenSpec, LabelDistribution, OracleBudget, OracleSettings,
    OutputSettings, ProgramSettings, QueryKind, SearchConfig, SearchSettings, StartStrategy, WorkloadSpec,
)

__all__ = [
    'BenchSettings', 'GeneratorSettings', 'GenSpec', 'LabelDistribution', 'OracleBudget', 'OracleSettings',
    'OutputSettings', 'ProgramSettings', 'QueryKind', 'SearchConfig', 'SearchSettings', 'StartStrategy',
    'WorkloadSpec',
]
