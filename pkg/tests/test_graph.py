import pytest
from hypothesis import given

from jaco.graph import (
    GraphError,
    add_edge,
    components,
    cycle_graph,
    disjoint_union,
    distance,
    format_edge_list,
    induced_subgraph,
    is_connected,
    make_graph,
    parse_edge_list,
    path_graph,
    remove_edge,
    remove_vertices,
    to_dot,
)

from .conftest import graphs


def test_make_graph_p4():
    g = make_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert g.sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert g == path_graph(4)


def test_single_vertex():
    g = make_graph(1, [])
    assert g.degree(1) == 0
    assert g.edges == frozenset()


def test_duplicate_edges_collapse():
    g = make_graph(3, [(1, 2), (1, 2), (2, 1)])
    assert g.sorted_edges() == [(1, 2)]


@pytest.mark.parametrize("pairs", [[(1, 1)], [(0, 2)], [(1, 5)]])
def test_bad_edges_rejected(pairs):
    with pytest.raises(GraphError):
        make_graph(4, pairs)


def test_path_and_cycle():
    assert path_graph(5).sorted_edges() == [(1, 2), (2, 3), (3, 4), (4, 5)]
    assert path_graph(1).edges == frozenset()
    assert cycle_graph(3).sorted_edges() == [(1, 2), (1, 3), (2, 3)]
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_distances_on_paths():
    p4, p5 = path_graph(4), path_graph(5)
    assert distance(p4, 1, 3) == 2
    assert distance(p4, 2, 3) == 1
    assert distance(p5, 2, 4) == 2
    assert distance(p5, 1, 4) == 3
    assert distance(p5, 3, 3) == 0


def test_unreachable_distance():
    g = make_graph(4, [(1, 2), (3, 4)])
    assert distance(g, 1, 4) is None


def test_components_of_two_k2():
    g = make_graph(4, [(1, 2), (3, 4)])
    assert components(g) == [[1, 2], [3, 4]]
    assert not is_connected(g)


def test_leaf_removal_gives_p3():
    h, labels = remove_vertices(path_graph(4), [1])
    assert h == path_graph(3)
    assert labels == [2, 3, 4]


def test_remove_all_vertices_rejected():
    with pytest.raises(GraphError):
        remove_vertices(path_graph(2), [1, 2])


def test_add_chord_to_p4():
    g = add_edge(path_graph(4), 1, 3)
    assert g.sorted_edges() == [(1, 2), (1, 3), (2, 3), (3, 4)]
    with pytest.raises(GraphError):
        add_edge(g, 3, 1)


def test_remove_missing_edge_rejected():
    with pytest.raises(GraphError):
        remove_edge(path_graph(3), 1, 3)


def test_disjoint_union_shifts_labels():
    g = disjoint_union([path_graph(2), path_graph(3)])
    assert g.sorted_edges() == [(1, 2), (3, 4), (4, 5)]


def test_edge_list_round_trip():
    g = path_graph(4)
    text = format_edge_list(g)
    assert text == "4\n1 2\n2 3\n3 4"
    assert parse_edge_list(text) == g


@pytest.mark.parametrize("text", ["", "x\n", "3\n1 2 3\n", "3\n1 4\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_dot_export():
    assert to_dot(path_graph(2)) == "graph G {\n  v1;\n  v2;\n  v1 -- v2;\n}"


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * len(g.edges)
    assert all(0 <= d <= g.n - 1 for d in g.degrees())


@given(graphs())
def test_induced_on_everything_is_identity(g):
    h, labels = induced_subgraph(g, g.vertices)
    assert labels == list(g.vertices)
    assert h.edges == g.edges


@given(graphs(min_n=2, connected=True))
def test_distance_is_a_metric(g):
    vs = list(g.vertices)
    for u in vs:
        for v in vs:
            assert distance(g, u, v) == distance(g, v, u)
            for w in vs:
                assert distance(g, u, w) <= distance(g, u, v) + distance(g, v, w)


@given(graphs(min_n=2))
def test_remove_then_add_restores(g):
    for u, v in g.sorted_edges():
        assert add_edge(remove_edge(g, u, v), u, v).edges == g.edges
