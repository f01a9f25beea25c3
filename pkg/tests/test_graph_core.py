import pytest

from graph_core.errors import (
    DanglingEndpointError, DisconnectedQueryError, DuplicateIdError, EmptyQueryError,
    InvalidStartError, NonDenseIdsError, UnknownNodeError,
)
from graph_core.graph import Direction, build_graph, build_query, degree_signature


def test_worked_graph_sizes(worked_graph, worked_query):
    assert worked_graph.node_count == 10
    assert worked_graph.edge_count == 12
    assert worked_query.node_count == 4
    assert worked_query.edge_count == 4


def test_adjacency_lists_are_ascending_and_directional(worked_graph):
    assert worked_graph.out_edges[0] == (0, 1, 2)
    assert worked_graph.in_edges[0] == (7, 8)
    assert worked_graph.out_edges[7] == (8, 9, 10, 11)
    assert worked_graph.incident_edges(0) == (0, 1, 2, 7, 8)
    assert worked_graph.undirected_neighbors(1) == [0, 2, 3]


def test_label_index_buckets(worked_graph):
    vocab = worked_graph.node_vocab
    assert worked_graph.label_index[vocab.lookup("A")] == (1, 6, 9)
    assert worked_graph.label_index[vocab.lookup("D")] == (4, 8)
    assert vocab.lookup("Z") is None
    assert worked_graph.node_label_names(5) == ["C"]


def test_degree_signature_totals_match_adjacency(worked_graph):
    for v in range(worked_graph.node_count):
        sig = degree_signature(worked_graph, v)
        assert sig.total(Direction.OUTGOING) == len(worked_graph.out_edges[v])
        assert sig.total(Direction.INCOMING) == len(worked_graph.in_edges[v])


def test_degree_signature_counts_per_label():
    g = build_graph([(0, []), (1, []), (2, [])],
                    [(0, 0, 1, ["x"]), (1, 0, 2, ["x"]), (2, 2, 0, ["y"]), (3, 0, 0, ["x", "y"])])
    x, y = g.edge_vocab.lookup("x"), g.edge_vocab.lookup("y")
    sig = degree_signature(g, 0)
    # the self-loop counts once per direction
    assert sig.count(x, Direction.OUTGOING) == 3
    assert sig.count(x, Direction.INCOMING) == 1
    assert sig.count(y, Direction.INCOMING) == 2
    assert sig.count(y, Direction.OUTGOING) == 1
    assert sig.total(Direction.OUTGOING) == 3
    assert sig.total(Direction.INCOMING) == 2


def test_degree_signature_unknown_node(worked_graph):
    with pytest.raises(UnknownNodeError):
        degree_signature(worked_graph, 10)


def test_signature_arrays_are_read_only(worked_graph):
    with pytest.raises(ValueError):
        worked_graph.sig_totals[0, 0] = 5


def test_parallel_edges_keep_their_identity():
    g = build_graph([(0, []), (1, [])], [(0, 0, 1, ["x"]), (1, 0, 1, ["y"]), (2, 1, 0, [])])
    assert g.edges_between(0, 1) == (0, 1)
    assert g.edges_between(1, 0) == (2,)
    assert g.edges_between(1, 1) == ()
    assert g.max_degree == 3


def test_max_degree_counts_self_loop_once():
    g = build_graph([(0, []), (1, [])], [(0, 0, 0, []), (1, 0, 1, [])])
    assert g.max_degree == 2


def test_self_loop_directions():
    g = build_graph([(0, [])], [(0, 0, 0, [])])
    edge = g.edges[0]
    assert edge.is_self_loop
    assert set(edge.directions(0)) == {Direction.OUTGOING, Direction.INCOMING}
    assert edge.other(0) == 0


def test_duplicate_ids_rejected():
    with pytest.raises(DuplicateIdError) as info:
        build_graph([(0, []), (0, [])], [])
    assert info.value.item_id == 0


def test_sparse_ids_rejected():
    with pytest.raises(NonDenseIdsError) as info:
        build_graph([(0, []), (2, [])], [])
    assert info.value.item_id == 2


def test_dangling_endpoint_rejected():
    with pytest.raises(DanglingEndpointError) as info:
        build_graph([(0, [])], [(0, 0, 3, [])])
    assert info.value.item_id == 3
    assert info.value.invariant == "DanglingEndpoint"


def test_query_must_be_connected():
    with pytest.raises(DisconnectedQueryError):
        build_query([(0, ["A"]), (1, ["B"])], [])


def test_query_connectivity_ignores_direction():
    q = build_query([(0, []), (1, []), (2, [])], [(0, 1, 0, []), (1, 1, 2, [])])
    assert q.component_count() == 1


def test_empty_query_rejected():
    with pytest.raises(EmptyQueryError):
        build_query([], [])


def test_start_node_defaults_to_smallest_id_and_is_validated():
    nodes, edges = [(1, []), (0, [])], [(0, 0, 1, [])]
    assert build_query(nodes, edges).start_node == 0
    assert build_query(nodes, edges, start=1).start_node == 1
    with pytest.raises(InvalidStartError):
        build_query(nodes, edges, start=5)


def test_query_shape_statistics(worked_query):
    assert worked_query.cyclomatic_number() == 1
    assert not worked_query.is_path()
    path = build_query([(0, []), (1, []), (2, [])], [(0, 0, 1, []), (1, 1, 2, [])])
    assert path.is_path()
    star = build_query([(0, []), (1, []), (2, [])], [(0, 0, 1, []), (1, 0, 2, [])])
    assert star.cyclomatic_number() == 0
    assert not star.is_path()


def test_label_vocabularies_are_separate():
    g = build_graph([(0, ["L"]), (1, [])], [(0, 0, 1, ["M"])])
    assert "L" in g.node_vocab and "L" not in g.edge_vocab
    assert "M" in g.edge_vocab and "M" not in g.node_vocab
