# Benchmark Module
# Synthetic graphs, extracted workloads and the matcher benchmark harness

from .benchmark import BenchCell, BenchQuery, BenchResult, PerformanceBenchmark
from .generator import generate_graph
from .runners import BaseMatcherRunner, MatcherFactory, RunOutcome
from .workload import extract_query, extract_workload

__all__ = [
    'BenchCell', 'BenchQuery', 'BenchResult', 'PerformanceBenchmark',
    'generate_graph', 'BaseMatcherRunner', 'MatcherFactory', 'RunOutcome',
    'extract_query', 'extract_workload',
]
