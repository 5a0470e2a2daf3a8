import numpy as np
import pytest

from lapspec.graph import (
    GraphError,
    build_graph,
    components,
    is_connected,
    is_tree,
    laplacian,
    parse_edge_list,
    read_edge_list,
    serialize_edge_list,
    write_edge_list,
)


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.degrees == (1, 1)
    assert g.m == 1


def test_claw_degrees():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degrees == (3, 1, 1, 1)
    assert g.high_degree_vertices() == [0]


def test_duplicate_collapses():
    g = build_graph(3, [(0, 1), (1, 0)])
    assert g.m == 1
    assert g.edges == ((0, 1),)


def test_adjacency_symmetric_and_sorted():
    g = build_graph(5, [(3, 0), (0, 1), (4, 0), (2, 1)])
    assert g.adjacency[0] == (1, 3, 4)
    for u in range(g.n):
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
    assert sum(g.degrees) == 2 * g.m


@pytest.mark.parametrize(
    "n, edges, fragment",
    [
        (3, [(0, 0)], "self-loop"),
        (2, [(0, 2)], "2"),
        (2, [(-1, 1)], "-1"),
    ],
)
def test_build_graph_rejects(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment):
        build_graph(n, edges)


def test_build_graph_rejects_empty():
    with pytest.raises(GraphError):
        build_graph(0, [])


def test_laplacian_p3():
    L = laplacian(build_graph(3, [(0, 1), (1, 2)]))
    assert L.tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert np.issubdtype(L.dtype, np.integer)


def test_laplacian_claw_and_edge():
    L = laplacian(build_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert np.diag(L).tolist() == [3, 1, 1, 1]
    assert L[0, 1:].tolist() == [-1, -1, -1]
    assert L[1:, 1:].tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert laplacian(build_graph(2, [(0, 1)])).tolist() == [[1, -1], [-1, 1]]


def test_is_tree():
    assert is_tree(build_graph(5, [(i, i + 1) for i in range(4)]))
    assert not is_tree(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_tree(build_graph(4, [(0, 1), (2, 3)]))
    assert is_tree(build_graph(1, []))


def test_components():
    g = build_graph(5, [(0, 1), (3, 4)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert not is_connected(g)


def test_parse_p3():
    g = parse_edge_list("3 2\n0 1\n1 2\n")
    assert g == build_graph(3, [(0, 1), (1, 2)])


def test_parse_ignores_comments_and_blanks():
    g = parse_edge_list("# a path\n\n3 2\n# edge list\n0 1\n\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


def test_parse_out_of_range():
    with pytest.raises(GraphError, match="2"):
        parse_edge_list("2 1\n0 2\n")


def test_parse_malformed_reports_line():
    with pytest.raises(GraphError, match="line 3"):
        parse_edge_list("3 2\n0 1\n1 x\n")


def test_parse_count_mismatch():
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 1\n0 1\n1 2\n")


def test_serialize_roundtrip_sorted():
    g = build_graph(4, [(2, 3), (0, 3), (1, 0)])
    text = serialize_edge_list(g, comment="demo")
    assert text.endswith("\n")
    body = [ln for ln in text.splitlines() if not ln.startswith("#")]
    assert body == ["4 3", "0 1", "0 3", "2 3"]
    assert parse_edge_list(text) == g


def test_file_roundtrip(tmp_path):
    g = build_graph(3, [(0, 2), (1, 2)])
    p = tmp_path / "g.txt"
    write_edge_list(g, p, comment="x")
    assert read_edge_list(p) == g
