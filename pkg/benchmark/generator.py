# benchmark/generator.py
"""
Seeded synthetic labeled multigraphs.

Every node and edge receives exactly one label, drawn uniformly or from a
bounded Zipf law over the alphabet. Edge end points are uniform.
"""

import logging
from typing import Optional

import numpy as np
from scipy.stats import zipfian

from data_models.models import GenSpec, LabelDistribution
from graph_core.errors import InfeasibleSpecError
from graph_io.documents import GraphDocument

logger = logging.getLogger(__name__)


def label_probabilities(alphabet: int, distribution: LabelDistribution,
                        exponent: float) -> Optional[np.ndarray]:
    """pmf over label ranks 0..alphabet-1, or None for uniform."""
    if LabelDistribution(distribution) is LabelDistribution.UNIFORM:
        return None
    pmf = zipfian.pmf(np.arange(1, alphabet + 1), exponent, alphabet)
    return pmf / pmf.sum()


def pair_capacity(spec: GenSpec) -> int:
    """Number of distinct ordered (src, dst) pairs the flags allow."""
    n = spec.node_count
    return n * (n - 1) + (n if spec.allow_self_loops else 0)


def _check_feasible(spec: GenSpec) -> None:
    if spec.node_count <= 0:
        raise InfeasibleSpecError(f"node_count must be positive, got {spec.node_count}", "GenSpec")
    if spec.edge_count < 0:
        raise InfeasibleSpecError(f"edge_count must be non-negative, got {spec.edge_count}", "GenSpec")
    if spec.node_label_alphabet <= 0 or spec.edge_label_alphabet <= 0:
        raise InfeasibleSpecError("label alphabets must be positive", "GenSpec")
    if LabelDistribution(spec.label_distribution) is LabelDistribution.ZIPF and spec.zipf_exponent <= 0:
        raise InfeasibleSpecError(f"zipf exponent must be positive, got {spec.zipf_exponent}", "GenSpec")
    capacity = pair_capacity(spec)
    if spec.edge_count > 0 and capacity == 0:
        raise InfeasibleSpecError(
            f"{spec.edge_count} edges requested but a single node without self-loops admits none", "GenSpec")
    if not spec.allow_parallel_edges and spec.edge_count > capacity:
        raise InfeasibleSpecError(
            f"{spec.edge_count} edges exceed the {capacity} distinct pairs of {spec.node_count} nodes", "GenSpec")


def _pair_endpoints(codes: np.ndarray, n: int, self_loops: bool):
    """Decode pair indexes: row-major over all pairs, or over pairs with src != dst."""
    if self_loops:
        return codes // n, codes % n
    src = codes // (n - 1)
    offset = codes % (n - 1)
    return src, offset + (offset >= src)


def generate_graph(spec: GenSpec) -> GraphDocument:
    """
    Generate a labeled multigraph document.

    Args:
        spec: sizes, alphabets, label distribution, seed and edge flags

    Returns:
        GraphDocument; byte-identical for identical specs

    Raises:
        InfeasibleSpecError: the flags cannot accommodate edge_count edges
    """
    _check_feasible(spec)
    rng = np.random.default_rng(spec.seed)
    n, m = spec.node_count, spec.edge_count

    node_p = label_probabilities(spec.node_label_alphabet, spec.label_distribution, spec.zipf_exponent)
    edge_p = label_probabilities(spec.edge_label_alphabet, spec.label_distribution, spec.zipf_exponent)
    node_labels = rng.choice(spec.node_label_alphabet, size=n, p=node_p)

    capacity = pair_capacity(spec)
    if spec.allow_parallel_edges:
        codes = rng.integers(0, capacity, size=m) if m else np.zeros(0, dtype=np.int64)
    else:
        codes = rng.choice(capacity, size=m, replace=False) if m else np.zeros(0, dtype=np.int64)
    src, dst = _pair_endpoints(np.asarray(codes, dtype=np.int64), n, spec.allow_self_loops)
    edge_labels = rng.choice(spec.edge_label_alphabet, size=m, p=edge_p)

    document = GraphDocument(
        nodes=[{"id": i, "labels": [f"N{k}"]} for i, k in enumerate(node_labels.tolist())],
        edges=[{"id": i, "src": s, "dst": d, "labels": [f"R{k}"]}
               for i, (s, d, k) in enumerate(zip(src.tolist(), dst.tolist(), edge_labels.tolist()))],
    )
    logger.info(f"[Generator] Generated graph |V|={n} |E|={m} "
                f"({LabelDistribution(spec.label_distribution).value} labels, seed={spec.seed})")
    return document
