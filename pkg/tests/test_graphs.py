import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twominor import (
    Graph,
    clique_number,
    complete_bipartite,
    complete_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    empty_graph,
    independence_number,
    is_claw_free,
    line_graph,
    path_graph,
    subdivide_once,
    wall,
)

from conftest import oracle_clique_number, seeded_graph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges = draw(st.frozensets(st.sampled_from(pairs)))
    else:
        edges = frozenset()
    return Graph(n, edges)


def test_graph_rejects_loops_and_bad_endpoints():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))  # must be sorted pairs
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_from_edges_normalizes():
    g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])
    assert g.edges == frozenset({(0, 2), (1, 2)})


def test_complete_bipartite_examples():
    claw = complete_bipartite(1, 3)
    assert claw.n == 4 and claw.m == 3
    assert sorted(claw.degree(v) for v in claw.vertices) == [1, 1, 1, 3]

    assert complete_bipartite(0, 0) == empty_graph(0)

    c4 = complete_bipartite(2, 2)
    assert c4.n == 4 and c4.m == 4
    assert clique_number(c4) == 2


def test_complete_bipartite_is_triangle_free():
    for m in range(1, 5):
        for n in range(1, 5):
            g = complete_bipartite(m, n)
            assert clique_number(g) == 2


def test_complete_bipartite_rejects_negative():
    with pytest.raises(ValueError):
        complete_bipartite(-1, 2)


def test_wall_is_subcubic():
    for k in range(1, 5):
        w = wall(k)
        assert w.max_degree() <= 3
        assert w.is_connected()
    with pytest.raises(ValueError):
        wall(0)


def test_wall_one_is_a_hexagon():
    w = wall(1)
    assert w.n == 6 and w.m == 6
    assert all(w.degree(v) == 2 for v in w.vertices)


def test_subdivide_once_counts():
    g = seeded_graph(3, 7, 0.5)
    s = subdivide_once(g)
    assert s.n == g.n + g.m
    assert s.m == 2 * g.m


def test_subdivide_once_edgeless_is_identity():
    g = empty_graph(5)
    assert subdivide_once(g) == g


def test_subdivide_once_single_edge():
    # The midpoint takes the next label, so K2 becomes the path 0-2-1.
    assert subdivide_once(complete_graph(2)) == Graph.from_edges(3, [(0, 2), (1, 2)])


def test_subdivide_once_keeps_original_labels():
    g = cycle_graph(4)
    s = subdivide_once(g)
    # Midpoints are appended after the original vertices in sorted edge order.
    for i, (u, v) in enumerate(sorted(g.edges)):
        assert s.has_edge(u, g.n + i) and s.has_edge(v, g.n + i)


def test_line_graph_small_cases():
    l_p3, order = line_graph(path_graph(3))
    assert l_p3 == complete_graph(2)
    assert order == ((0, 1), (1, 2))

    l_k3, _ = line_graph(complete_graph(3))
    assert l_k3 == complete_graph(3)

    l_claw, _ = line_graph(complete_bipartite(1, 3))
    assert l_claw == complete_graph(3)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_line_graphs_are_claw_free(g):
    lg, _ = line_graph(g)
    assert is_claw_free(lg)


def test_claw_detection():
    assert not is_claw_free(complete_bipartite(1, 3))
    assert is_claw_free(cycle_graph(5))
    assert is_claw_free(complete_graph(6))


def test_clique_number_fixed_values():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(complete_bipartite(3, 3)) == 2
    assert clique_number(empty_graph(4)) == 1
    assert clique_number(empty_graph(0)) == 0


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_clique_number_matches_subset_enumeration(g):
    assert clique_number(g) == oracle_clique_number(g)


@settings(max_examples=40)
@given(graphs(max_n=6))
def test_independence_is_clique_of_complement(g):
    assert independence_number(g) == oracle_clique_number(g.complement())


def test_clique_number_full_iff_complete():
    for seed in range(20):
        g = seeded_graph(seed, 6, 0.6)
        assert (clique_number(g) == g.n) == (g.m == g.n * (g.n - 1) // 2)


def test_clique_cap():
    from twominor import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        clique_number(empty_graph(65))


def test_connected_components_examples():
    assert connected_components(empty_graph(3)) == [[0], [1], [2]]
    assert connected_components(complete_graph(4)) == [[0, 1, 2, 3]]
    two = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert connected_components(two) == [[0, 1], [2, 3, 4]]


def test_contract_edge():
    c4 = cycle_graph(4)
    g = contract_edge(c4, 0, 1)
    assert g == complete_graph(3)
    with pytest.raises(ValueError):
        contract_edge(c4, 0, 2)


def test_induced_subgraph_relabels_sorted():
    g = Graph.from_edges(5, [(0, 2), (2, 4), (1, 3)])
    sub = g.induced_subgraph({0, 2, 4})
    assert sub == path_graph(3)


def test_complement_involution():
    g = seeded_graph(11, 6, 0.4)
    assert g.complement().complement() == g


def test_set_neighborhood():
    g = path_graph(5)
    assert g.set_neighborhood({2}) == frozenset({1, 3})
    assert g.set_neighborhood({1, 2}) == frozenset({0, 3})
