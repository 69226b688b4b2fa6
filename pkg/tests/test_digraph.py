import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digraph_subdiv import (DiGraph, Dipath, from_edge_list, induced_subdigraph, parse_digraph,
                            shortest_dipath, undirected_component, vertices_reaching)
from digraph_subdiv.digraph import format_digraph
from digraph_subdiv.errors import DuplicateEdge, LoopEdge, OutOfRange, ParseError
from digraph_subdiv.generators import complete_digraph, oriented_bipartite, two_cliques_bottleneck

from conftest import small_digraphs
from oracles import adjacency, fewest_inner


def test_cycle_out_degrees(cycle3):
    assert cycle3.out_degrees() == [1, 1, 1]
    assert cycle3.min_out_degree() == 1


def test_both_orientations_allowed():
    g = from_edge_list(2, [(0, 1), (1, 0)])
    assert g == complete_digraph(2)


@pytest.mark.parametrize("pairs, exc", [
    ([(0, 0)], LoopEdge),
    ([(0, 1), (0, 1)], DuplicateEdge),
    ([(0, 2)], OutOfRange),
    ([(-1, 0)], OutOfRange),
])
def test_rejects_bad_edges(pairs, exc):
    with pytest.raises(exc) as info:
        from_edge_list(2, pairs)
    assert info.value.pair == pairs[-1]


def test_degrees():
    k5 = complete_digraph(5)
    assert all(k5.out_degree(v) == 4 and k5.in_degree(v) == 4 for v in k5.vertices())
    assert oriented_bipartite(3).min_out_degree() == 0
    with pytest.raises(OutOfRange):
        k5.out_degree(5)


def test_empty_graph():
    g = from_edge_list(0, [])
    assert g.min_out_degree() == 0 and g.size == 0
    single = from_edge_list(1, [])
    assert single.min_out_degree() == 0


def test_induced_subdigraph(cycle3):
    sub, relabel = induced_subdigraph(cycle3, {0, 1})
    assert list(sub.edges()) == [(0, 1)]
    assert relabel == {0: 0, 1: 1}
    same, ident = induced_subdigraph(cycle3, range(3))
    assert same == cycle3 and ident == {0: 0, 1: 1, 2: 2}
    k2, _ = induced_subdigraph(complete_digraph(4), {1, 3})
    assert k2 == complete_digraph(2)
    empty, _ = induced_subdigraph(cycle3, [])
    assert empty.order == 0


@settings(max_examples=60)
@given(small_digraphs(), st.data())
def test_induced_composes(g, data):
    a = data.draw(st.sets(st.sampled_from(range(g.order))))
    b = data.draw(st.sets(st.sampled_from(sorted(a)))) if a else set()
    ha, ra = induced_subdigraph(g, a)
    hab, rab = induced_subdigraph(ha, {ra[v] for v in b})
    hb, _ = induced_subdigraph(g, b)
    assert hab == hb


@settings(max_examples=80)
@given(small_digraphs())
def test_degree_sums(g):
    assert sum(g.out_degrees()) == sum(g.in_degrees()) == g.size == len(list(g.edges()))
    assert all(not g.has_edge(v, v) for v in g.vertices())


def test_vertices_reaching(cycle3, path3):
    assert vertices_reaching(cycle3, 0) == {0, 1, 2}
    assert vertices_reaching(path3, 2, {1}) == {2}
    g = two_cliques_bottleneck(12)
    b = set(range(13, 25))
    assert vertices_reaching(g, 13, {12}) == b


@settings(max_examples=60)
@given(small_digraphs(), st.data())
def test_reaching_is_closed(g, data):
    y = data.draw(st.sampled_from(range(g.order)))
    forbidden = data.draw(st.sets(st.sampled_from([v for v in g.vertices() if v != y])))
    reach = vertices_reaching(g, y, forbidden)
    # nothing outside reach and forbidden has an edge into reach
    for u, v in g.edges():
        if v in reach:
            assert u in reach or u in forbidden


def test_undirected_component():
    two = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert undirected_component(two, 0) == {0, 1, 2}
    assert undirected_component(complete_digraph(4), 2) == {0, 1, 2, 3}
    g = two_cliques_bottleneck(12)
    assert undirected_component(g, 0, set(range(12, 25))) == set(range(12))


def test_shortest_dipath_examples(path3):
    k = complete_digraph(5)
    assert shortest_dipath(k, 0, 3, {1, 2}) == Dipath(0, 3, ())
    assert shortest_dipath(path3, 0, 2, {1}) is None
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert shortest_dipath(c4, 0, 2, max_inner=0) is None
    assert shortest_dipath(c4, 0, 2, max_inner=1) == Dipath(0, 2, (1,))


@settings(max_examples=150)
@given(small_digraphs(max_n=8), st.data())
def test_shortest_dipath_is_minimal(g, data):
    x = data.draw(st.sampled_from(range(g.order)))
    y = data.draw(st.sampled_from([v for v in g.vertices() if v != x]))
    rest = [v for v in g.vertices() if v not in (x, y)]
    forbidden = data.draw(st.sets(st.sampled_from(rest))) if rest else set()
    max_inner = data.draw(st.integers(0, g.order))
    got = shortest_dipath(g, x, y, forbidden, max_inner)
    expected = fewest_inner(adjacency(g.order, g.edges()), x, y, forbidden, max_inner)
    if expected is None:
        assert got is None
    else:
        assert got is not None and len(got.inner) == expected
        assert got.is_valid_in(g) and not set(got.inner) & forbidden


def test_text_round_trip():
    g = two_cliques_bottleneck(4)
    assert parse_digraph(format_digraph(g)) == g
    text = "# comment\ndigraph v1\n3 2\n0 1\n# inner comment\n1 2\n"
    assert list(parse_digraph(text).edges()) == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text, line", [
    ("digraph v1\n2 1\n0 0\n", 3),
    ("digraph v1\n2 2\n0 1\n0 1\n", 4),
    ("digraph v1\n2 1\n0 5\n", 3),
    ("digraph v2\n2 0\n", 1),
    ("digraph v1\n2 2\n0 1\n", 2),
    ("digraph v1\n2 1\n0 x\n", 3),
])
def test_parse_errors_name_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_digraph(text)
    assert info.value.line == line


def test_graph_is_hashable_and_immutable_views(cycle3):
    assert isinstance(cycle3.out_neighbors(0), tuple)
    assert hash(cycle3) == hash(from_edge_list(3, [(2, 0), (0, 1), (1, 2)]))
    assert isinstance(cycle3, DiGraph)
