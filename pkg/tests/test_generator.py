from collections import Counter

import numpy as np
import pytest

from benchmark.generator import generate_graph, label_probabilities, pair_capacity
from data_models.models import GenSpec, LabelDistribution
from graph_core.errors import InfeasibleSpecError
from utils.file_utils import FileUtils


def test_same_spec_same_bytes():
    spec = GenSpec(node_count=10, edge_count=12, seed=7)
    first = FileUtils.dumps_json(generate_graph(spec).to_dict())
    second = FileUtils.dumps_json(generate_graph(spec).to_dict())
    assert first == second
    other = FileUtils.dumps_json(generate_graph(GenSpec(node_count=10, edge_count=12, seed=8)).to_dict())
    assert other != first


def test_sizes_and_single_labels():
    doc = generate_graph(GenSpec(node_count=10, edge_count=12, seed=7))
    g = doc.build()
    assert (g.node_count, g.edge_count) == (10, 12)
    assert all(len(n["labels"]) == 1 and n["labels"][0].startswith("N") for n in doc.nodes)
    assert all(len(e["labels"]) == 1 and e["labels"][0].startswith("R") for e in doc.edges)
    assert len(g.node_vocab) <= 14 and len(g.edge_vocab) <= 18


def test_no_self_loops_by_default():
    g = generate_graph(GenSpec(node_count=5, edge_count=40, seed=1)).build()
    assert not any(edge.is_self_loop for edge in g.edges)


def test_simple_graph_without_parallel_edges():
    spec = GenSpec(node_count=4, edge_count=12, allow_parallel_edges=False, seed=3)
    g = generate_graph(spec).build()
    pairs = [(e.src, e.dst) for e in g.edges]
    assert len(set(pairs)) == 12 == pair_capacity(spec)


def test_self_loops_when_allowed():
    spec = GenSpec(node_count=3, edge_count=9, allow_parallel_edges=False, allow_self_loops=True, seed=0)
    g = generate_graph(spec).build()
    assert sum(edge.is_self_loop for edge in g.edges) == 3


def test_infeasible_specs():
    with pytest.raises(InfeasibleSpecError):
        generate_graph(GenSpec(node_count=3, edge_count=7, allow_parallel_edges=False))
    with pytest.raises(InfeasibleSpecError):
        generate_graph(GenSpec(node_count=1, edge_count=1))
    with pytest.raises(InfeasibleSpecError):
        generate_graph(GenSpec(node_count=0, edge_count=0))
    with pytest.raises(InfeasibleSpecError):
        generate_graph(GenSpec(node_count=5, edge_count=5, label_distribution=LabelDistribution.ZIPF,
                               zipf_exponent=0.0))


def test_zipf_labels_are_skewed():
    p = label_probabilities(14, LabelDistribution.ZIPF, 1.2)
    assert p.shape == (14,)
    assert np.isclose(p.sum(), 1.0)
    assert np.all(np.diff(p) < 0)
    assert label_probabilities(14, LabelDistribution.UNIFORM, 1.2) is None

    doc = generate_graph(GenSpec(node_count=5000, edge_count=0, seed=4,
                                 label_distribution=LabelDistribution.ZIPF))
    counts = Counter(n["labels"][0] for n in doc.nodes)
    assert counts["N0"] > counts["N1"] > counts["N5"]
