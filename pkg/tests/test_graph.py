"""Graph core: recognizers, induced subgraphs, edge-list I/O."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forestbound import (
    ForestClass,
    Graph,
    ParseError,
    UnknownVertex,
    format_edge_list,
    induced_subgraph,
    is_caterpillar_forest,
    is_forest,
    is_linear_forest,
    is_star_forest,
    parse_edge_list,
)
from forestbound.generate import complete_graph, cycle_graph, path_graph, star_graph


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@st.composite
def forests(draw, max_n=10):
    """Random labeled forest: each vertex optionally attaches to an earlier one."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = []
    for v in range(1, n):
        if draw(st.booleans()):
            edges.append((draw(st.integers(min_value=0, max_value=v - 1)), v))
    return Graph.from_edges(n, edges)


class TestInducedSubgraph:
    def test_k4_two_vertices_is_edge(self):
        sub = induced_subgraph(complete_graph(4), {1, 3})
        assert sub.n == 2 and sub.m == 1

    def test_c5_minus_vertex_is_p4(self):
        sub = induced_subgraph(cycle_graph(5), {1, 2, 3, 4})
        assert sub.n == 4 and sub.m == 3 and is_linear_forest(sub)

    def test_empty_subset(self):
        sub = induced_subgraph(complete_graph(4), set())
        assert sub.n == 0 and sub.m == 0

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            induced_subgraph(complete_graph(3), {0, 7})

    def test_identifiers_survive(self):
        g = cycle_graph(5).delete_vertex(0)
        assert g.vertices == (1, 2, 3, 4)
        assert g.degree(1) == 1 and g.degree(2) == 2


class TestRecognizers:
    def test_path_is_linear(self):
        assert is_linear_forest(path_graph(5))

    def test_claw_is_not_linear(self):
        assert not is_linear_forest(star_graph(3))

    def test_triangle_is_not_linear(self):
        assert not is_linear_forest(cycle_graph(3))

    def test_claw_caterpillar_degree_bounds(self):
        assert is_caterpillar_forest(star_graph(3), 3)
        assert not is_caterpillar_forest(star_graph(3), 2)

    def test_spider_is_not_caterpillar(self):
        # three legs of length 2: removing leaves leaves a claw, not a path
        spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert strip_leaves_is_path_oracle(spider) is False
        assert not is_caterpillar_forest(spider)
        assert is_caterpillar_forest(star_graph(3))

    def test_star_forest_members(self):
        assert is_star_forest(star_graph(5))
        assert not is_star_forest(path_graph(4))
        two_comp = Graph.from_edges(3, [(0, 1)])
        assert is_star_forest(two_comp)

    def test_isolated_vertices_allowed_everywhere(self):
        g = Graph.from_edges(3, [])
        assert is_linear_forest(g) and is_caterpillar_forest(g) and is_star_forest(g)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            is_caterpillar_forest(path_graph(2), 1)


def strip_leaves_is_path_oracle(g: Graph) -> bool:
    """Leaf-removal oracle for caterpillar trees: spine must be empty/path."""
    if not is_forest(g):
        return False
    for comp in g.components():
        sub = g.induced(comp)
        spine = {v for v in sub.vertices if sub.degree(v) >= 2}
        core = sub.induced(spine)
        if core.n and (core.max_degree() > 2 or not core.is_connected()):
            return False
    return True


def acyclic_by_union_find(g: Graph) -> bool:
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def test_linear_forest_forbidden_structure_exhaustive():
    """Exhaustive n <= 6: linear forest iff no cycle and no vertex of degree >= 3."""
    for n in range(1, 7):
        total = 1 << (n * (n - 1) // 2)
        for mask in range(total):
            g = graph_from_mask(n, mask)
            expected = acyclic_by_union_find(g) and all(g.degree(v) <= 2 for v in g.vertices)
            assert is_linear_forest(g) == expected, (n, mask)


def test_caterpillar_and_star_against_oracles_small():
    for n in range(1, 6):
        total = 1 << (n * (n - 1) // 2)
        for mask in range(total):
            g = graph_from_mask(n, mask)
            assert is_caterpillar_forest(g) == strip_leaves_is_path_oracle(g)
            star_expected = acyclic_by_union_find(g) and all(
                not (g.degree(u) >= 2 and g.degree(v) >= 2) for u, v in g.edges()
            )
            assert is_star_forest(g) == star_expected


@settings(max_examples=80, deadline=None)
@given(graphs(), st.data())
def test_recognizers_hereditary(g, data):
    outer = data.draw(st.sets(st.sampled_from(sorted(g.vertices)), max_size=g.n))
    inner = data.draw(st.sets(st.sampled_from(sorted(outer) or [0]), max_size=len(outer))) if outer else set()
    inner &= outer
    big, small = g.induced(outer), g.induced(inner)
    for check in (
        is_linear_forest,
        is_star_forest,
        lambda h: is_caterpillar_forest(h),
        lambda h: is_caterpillar_forest(h, 3),
    ):
        if check(big):
            assert check(small)


@settings(max_examples=120, deadline=None)
@given(forests())
def test_class_containment_chain(f):
    if is_star_forest(f):
        assert is_caterpillar_forest(f)
    if is_caterpillar_forest(f) and f.max_degree() <= 2:
        assert is_linear_forest(f)
    # every forest with max degree <= 2 is linear, and every linear forest is
    # a caterpillar forest
    if is_linear_forest(f):
        assert is_caterpillar_forest(f, 2)


class TestEdgeListFormat:
    def test_round_trip(self):
        g = cycle_graph(6)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks(self):
        text = "# a comment\n\n3 2\n0 1  # inline\n\n1 2\n"
        g = parse_edge_list(text)
        assert g.n == 3 and g.m == 2

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "3\n",
            "3 2\n0 1\n",
            "2 1\n0 5\n",
            "2 1\n1 1\n",
            "2 1\n0 x\n",
            "2 2\n0 1\n1 0\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_edge_list(text)


class TestForestClass:
    def test_text_round_trip(self):
        for cls in (
            ForestClass("linear"),
            ForestClass("star"),
            ForestClass.caterpillar(),
            ForestClass.caterpillar(4),
        ):
            assert ForestClass.from_text(cls.to_text()) == cls

    def test_invalid(self):
        with pytest.raises(ValueError):
            ForestClass.caterpillar(1)
        with pytest.raises(ParseError):
            ForestClass.from_text("banana")


def test_degree_histogram():
    h = star_graph(4).degree_histogram()
    assert h.counts == {4: 1, 1: 4} and h.max_degree == 4 and h.n == 5


def test_graph_immutability_of_operations():
    g = cycle_graph(4)
    g2 = g.add_edge(0, 2)
    assert g.m == 4 and g2.m == 5
    g3 = g.delete_vertex(0)
    assert g.n == 4 and g3.n == 3
