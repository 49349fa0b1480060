import pytest
from hypothesis import given

from vedom.graph import (
    Graph,
    GraphFormatError,
    bit_list,
    connected_components,
    good_pendant_edges,
    induced_delete,
    is_tree,
    mask_from,
    parse_edge_list,
    relabeled,
    serialize_edge_list,
)

from tests.strategies import graphs


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


class TestParsing:
    def test_single_edge(self):
        g = parse_edge_list("n 2\n0 1\n")
        assert g.n == 2
        assert g.edges == ((0, 1),)

    def test_path_six(self):
        g = parse_edge_list("n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n")
        assert g.n == 6
        assert len(g.edges) == 5

    def test_duplicate_edge_reports_line(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            parse_edge_list("n 3\n0 1\n0 1\n")

    def test_duplicate_detected_in_either_orientation(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_edge_list("n 3\n0 1\n1 0\n")

    def test_self_loop_reports_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("n 3\n1 1\n")

    def test_index_beyond_declared_count(self):
        with pytest.raises(GraphFormatError, match="exceeds"):
            parse_edge_list("n 2\n0 2\n")

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse_edge_list("0 1 2\n")

    def test_non_numeric(self):
        with pytest.raises(GraphFormatError, match="malformed"):
            parse_edge_list("a b\n")

    def test_header_not_first(self):
        with pytest.raises(GraphFormatError, match="first"):
            parse_edge_list("0 1\nn 4\n")

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a path\n\nn 3\n# middle\n0 1\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))

    def test_without_header_counts_from_max_index(self):
        g = parse_edge_list("0 1\n1 4\n")
        assert g.n == 5

    def test_empty_document_is_empty_graph(self):
        g = parse_edge_list("")
        assert g.n == 0 and g.edges == ()

    def test_header_only_isolated_vertices(self):
        g = parse_edge_list("n 3\n")
        assert g.n == 3 and g.edges == ()

    def test_roundtrip_examples(self):
        for text in ("n 2\n0 1\n", "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n", "n 4\n"):
            g = parse_edge_list(text)
            assert serialize_edge_list(g) == text


@given(graphs())
def test_roundtrip_is_identity(g):
    again = parse_edge_list(serialize_edge_list(g))
    assert again.n == g.n
    assert again.edges == g.edges
    assert again.adj == g.adj


@given(graphs())
def test_closed_neighborhood_two_ways(g):
    ids = g.edge_ids()
    for v in range(g.n):
        closed = g.closed_neighborhood(v)
        assert len(closed) == g.degree(v) + 1
        from_adj = set(g.adj[v]) | {v}
        from_edges = {v}
        for u, w in g.edges:
            if u == v:
                from_edges.add(w)
            if w == v:
                from_edges.add(u)
        assert set(closed) == from_adj == from_edges
    assert list(ids.values()) == sorted(ids.values())


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(2, [(0, 2)])

    def test_canonical_edge_order(self):
        g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))


class TestIsTree:
    def test_path_is_tree(self):
        assert is_tree(path(6))

    def test_cycle_is_not(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert not is_tree(c4)

    def test_disconnected_is_not(self):
        two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not is_tree(two_edges)

    def test_trivial_orders(self):
        assert not is_tree(Graph.from_edges(0, []))
        assert is_tree(Graph.from_edges(1, []))


class TestComponents:
    def test_single_component(self):
        assert connected_components(path(6)) == [mask_from(range(6))]

    def test_two_components(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        assert connected_components(g) == [mask_from((0, 1, 2)), mask_from((3, 4))]

    def test_empty_graph(self):
        assert connected_components(Graph.from_edges(0, [])) == []


class TestGoodPendantEdges:
    def test_path_six_both_ends(self):
        assert good_pendant_edges(path(6)) == [(0, 1), (5, 4)]

    def test_star_has_none(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert good_pendant_edges(star) == []

    def test_path_four(self):
        pairs = good_pendant_edges(path(4))
        assert pairs == [(0, 1), (3, 2)]
        g = path(4)
        for leaf, support in pairs:
            assert g.degree(leaf) == 1
            assert g.degree(support) == 2


class TestInducedDelete:
    def test_middle_of_path(self):
        sub, remap = induced_delete(path(6), mask_from((2, 3)))
        assert sub.n == 4
        assert sub.edges == ((0, 1), (2, 3))
        assert remap == {0: 0, 1: 1, 4: 2, 5: 3}

    def test_delete_nothing_is_identity(self):
        g = path(6)
        sub, remap = induced_delete(g, 0)
        assert sub == g
        assert remap == {v: v for v in range(6)}

    def test_leaf_removal(self):
        sub, _ = induced_delete(path(4), 1 << 0)
        assert sub.edges == ((0, 1), (1, 2))


@given(graphs(min_n=1))
def test_relabeled_preserves_degrees(g):
    perm = list(reversed(range(g.n)))
    h = relabeled(g, perm)
    assert sorted(g.degree(v) for v in range(g.n)) == sorted(
        h.degree(v) for v in range(h.n)
    )


def test_bit_helpers():
    assert bit_list(mask_from([5, 1, 3])) == [1, 3, 5]
    assert bit_list(0) == []
