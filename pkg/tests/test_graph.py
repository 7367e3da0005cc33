import numpy as np
import pytest
from hypothesis import given, settings

from lecent.graph import (Graph, GraphError, GraphParseError, adjacency, complete, core_periphery,
                          degrees, florentine, laplacian, make_family, parse_edge_list, path,
                          read_edge_list, serialize_edge_list, star, write_edge_list)

from conftest import graphs
from oracles import dense_laplacian


def test_parse_basic():
    g = parse_edge_list("a b\nb c")
    assert g.labels == ("a", "b", "c")
    assert g.sorted_edges() == [(0, 1), (1, 2)]


def test_parse_collapses_duplicates():
    g = parse_edge_list("a b\nb a\na b")
    assert g.n_edges == 1


def test_parse_self_loop_reports_line():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_edge_list("a b\na a")


def test_parse_rejects_three_tokens():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("# header\na b c")
    assert exc.value.line == 2


def test_parse_isolated_and_comments():
    g = parse_edge_list("# comment\n\nx\na,b\n  y  \n")
    assert g.labels == ("x", "a", "b", "y")
    assert degrees(g).tolist() == [0, 1, 1, 0]


def test_numeric_labels_stay_strings():
    g = parse_edge_list("10 2\n2 1")
    assert g.labels == ("10", "2", "1")


def test_parse_header_skips_first_data_line():
    g = parse_edge_list("source,target\na,b", header=True)
    assert g.labels == ("a", "b")


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_serialize_roundtrip(g):
    g2 = parse_edge_list(serialize_edge_list(g))
    assert g2.labels == g.labels
    assert g2.edges == g.edges


def test_file_roundtrip(tmp_path):
    g = florentine()
    p = tmp_path / "f.edges"
    write_edge_list(g, p)
    assert read_edge_list(p) == g


def test_graph_rejects_self_loop_and_bad_index():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(["a", "a"], [])


def test_families():
    assert degrees(star(4)).tolist() == [3, 1, 1, 1]
    cp = core_periphery(6, 2)
    assert degrees(cp).tolist() == [5, 5, 2, 2, 2, 2]
    assert complete(3).n_edges == 3
    assert path(4).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert make_family("star", 4) == star(4)


@pytest.mark.parametrize("kind,n,k", [("star", 0, None), ("core_periphery", 5, 5),
                                      ("core_periphery", 5, 0), ("core_periphery", 5, None),
                                      ("wheel", 5, None)])
def test_family_errors(kind, n, k):
    with pytest.raises((GraphError, ValueError)):
        make_family(kind, n, k)


def test_star4_laplacian_matches_display():
    expected = np.array([[3, -1, -1, -1], [-1, 1, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1]])
    assert np.array_equal(laplacian(star(4)), expected)


def test_k2_laplacian_and_isolated_row():
    assert np.array_equal(laplacian(complete(2)), [[1, -1], [-1, 1]])
    g = Graph.from_edges(3, [(0, 1)])
    assert not laplacian(g)[2].any()


def test_florentine():
    g = florentine()
    assert g.n == 16
    assert g.n_edges == 20
    d = degrees(g)
    assert d[g.index("Medici")] == 6
    assert d[g.index("Pucci")] == 0


def test_florentine_matches_networkx():
    nx = pytest.importorskip("networkx")
    ref = nx.florentine_families_graph()
    g = florentine()
    ours = {frozenset((g.labels[i], g.labels[j])) for i, j in g.edges}
    theirs = {frozenset(e) for e in ref.edges()}
    assert ours == theirs


@given(graphs())
@settings(max_examples=80, deadline=None)
def test_laplacian_invariants(g):
    lap = laplacian(g)
    assert np.trace(lap) == degrees(g).sum() == 2 * g.n_edges
    assert not lap.sum(axis=1).any()
    assert np.array_equal(lap, lap.T)
    assert np.array_equal(np.diag(lap), degrees(g))
    assert np.array_equal(lap, dense_laplacian(g.n, g.edges))
    assert np.array_equal(adjacency(g), np.diag(degrees(g)) - lap)


def test_matrices_are_read_only():
    with pytest.raises(ValueError):
        laplacian(star(3))[0, 0] = 5


def test_relabel():
    g = path(3)
    h = g.relabel([2, 0, 1])
    assert h.labels == ("2", "0", "1")
    assert sorted(degrees(h).tolist()) == [1, 1, 2]
    assert degrees(h)[h.index("1")] == 2
