import random

import pytest

from twominor import (
    Graph,
    InducedMinorModel,
    MinorModel,
    ModelValidationError,
    ResourceLimitError,
    clique_number,
    complete_bipartite,
    complete_graph,
    compose_models,
    connected_components,
    cycle_graph,
    empty_graph,
    find_induced_minor_model,
    find_minor_model,
    identity_model,
    lsg_canonical_model,
    minimize_minor_model,
    model_from_text,
    model_to_text,
    path_graph,
    restrict_model,
    shrink_connected_cover,
    subdivision_model,
    validate_model,
    wall,
)
from twominor.minors import _deletion_keeps_valid

from conftest import oracle_contains_minor, seeded_graph


def is_minimal(m):
    return not any(
        _deletion_keeps_valid(m, v, x) for v in m.branch_sets for x in m.branch_sets[v]
    )


def test_identity_model_is_valid_induced():
    g = seeded_graph(5, 6, 0.5)
    assert validate_model(identity_model(g), induced=True) == []


def test_validate_flags_disconnected_branch_set():
    host = path_graph(4)
    m = MinorModel(
        pattern=complete_graph(1), host=host, branch_sets={0: frozenset({0, 3})}
    )
    problems = validate_model(m)
    assert problems == ["branch set of pattern vertex 0 is not connected in the host"]


def test_validate_flags_empty_overlap_and_range():
    host = path_graph(3)
    empty_set = MinorModel(pattern=complete_graph(1), host=host, branch_sets={0: frozenset()})
    assert "is empty" in validate_model(empty_set)[0]

    overlap = MinorModel(
        pattern=empty_graph(2),
        host=host,
        branch_sets={0: frozenset({0, 1}), 1: frozenset({1, 2})},
    )
    assert any("overlap" in p for p in validate_model(overlap))

    out_of_range = MinorModel(
        pattern=complete_graph(1), host=host, branch_sets={0: frozenset({9})}
    )
    assert any("non-host" in p for p in validate_model(out_of_range))

    wrong_keys = MinorModel(pattern=complete_graph(2), host=host, branch_sets={0: frozenset({0})})
    assert any("exactly the pattern vertices" in p for p in validate_model(wrong_keys))


def test_validate_edge_constraints():
    host = empty_graph(2)
    m = MinorModel(
        pattern=complete_graph(2),
        host=host,
        branch_sets={0: frozenset({0}), 1: frozenset({1})},
    )
    assert any("no host edge" in p for p in validate_model(m))

    host2 = complete_graph(2)
    m2 = InducedMinorModel(
        pattern=empty_graph(2),
        host=host2,
        branch_sets={0: frozenset({0}), 1: frozenset({1})},
    )
    assert any("non-edge" in p for p in validate_model(m2))
    # As a plain minor model the same assignment is fine.
    assert validate_model(m2, induced=False) == []


def test_find_induced_minor_examples():
    m = find_induced_minor_model(cycle_graph(5), cycle_graph(4))
    assert m is not None
    assert validate_model(m, induced=True) == []

    assert find_induced_minor_model(complete_bipartite(1, 3), complete_graph(3)) is None

    host = lsg_canonical_model(complete_bipartite(2, 2)).host
    m = find_induced_minor_model(host, complete_bipartite(2, 2))
    assert m is not None


def test_empty_pattern_has_empty_model():
    m = find_induced_minor_model(path_graph(3), empty_graph(0))
    assert m is not None and m.branch_sets == {}
    assert validate_model(m, induced=True) == []


def test_search_caps():
    with pytest.raises(ResourceLimitError):
        find_minor_model(empty_graph(15), complete_graph(2))
    with pytest.raises(ResourceLimitError):
        find_minor_model(empty_graph(10), empty_graph(7))


def test_search_agrees_with_brute_force():
    for seed in range(50):
        rng = random.Random(seed)
        host = seeded_graph(seed, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7]))
        pattern = seeded_graph(seed + 9999, rng.randint(1, 4), 0.5)
        for induced in (True, False):
            finder = find_induced_minor_model if induced else find_minor_model
            found = finder(host, pattern)
            assert (found is not None) == oracle_contains_minor(host, pattern, induced)
            if found is not None:
                assert validate_model(found, induced=induced) == []


def test_minimize_shrinks_to_adjacent_singletons():
    host = path_graph(4)
    m = MinorModel(
        pattern=complete_graph(2),
        host=host,
        branch_sets={0: frozenset({0, 1, 2}), 1: frozenset({3})},
    )
    result = minimize_minor_model(m)
    assert result.branch_sets == {0: frozenset({2}), 1: frozenset({3})}
    assert is_minimal(result)


def test_minimize_fixpoint_on_singletons():
    g = cycle_graph(4)
    m = MinorModel(
        pattern=g, host=g, branch_sets={v: frozenset({v}) for v in range(4)}
    )
    assert minimize_minor_model(m).branch_sets == m.branch_sets


def test_minimize_rejects_invalid_input():
    host = path_graph(4)
    bad = MinorModel(
        pattern=complete_graph(2),
        host=host,
        branch_sets={0: frozenset({0, 3}), 1: frozenset({1})},
    )
    with pytest.raises(ModelValidationError):
        minimize_minor_model(bad)


def test_minimized_subcubic_models_have_small_branch_cliques():
    # A branch set that starts as a 4-clique blob must shrink below clique 4.
    for seed in range(40):
        rng = random.Random(seed)
        host = seeded_graph(7000 + seed, rng.randint(2, 10), 0.6)
        pattern = seeded_graph(8000 + seed, rng.randint(1, 4), 0.5)
        if pattern.max_degree() > 3:
            continue
        found = find_minor_model(host, pattern)
        if found is None:
            continue
        result = minimize_minor_model(found)
        assert is_minimal(result)
        for s in result.branch_sets.values():
            assert clique_number(host.induced_subgraph(s)) <= 3


def test_minimize_planted_clique_branch_set():
    # K_{1,3} model in a host where the center's branch set starts as a 5-clique.
    pattern = complete_bipartite(1, 3)
    edges = set()
    clique = [0, 1, 2, 3, 4]
    for a in clique:
        for b in clique:
            if a < b:
                edges.add((a, b))
    edges |= {(0, 5), (1, 6), (2, 7)}
    host = Graph.from_edges(8, edges)
    m = MinorModel(
        pattern=pattern,
        host=host,
        branch_sets={
            0: frozenset(clique),
            1: frozenset({5}),
            2: frozenset({6}),
            3: frozenset({7}),
        },
    )
    result = minimize_minor_model(m)
    assert is_minimal(result)
    for s in result.branch_sets.values():
        assert clique_number(host.induced_subgraph(s)) <= 3


def test_shrink_single_vertex_cases():
    g = path_graph(2)
    assert shrink_connected_cover(g, {0}, {1}) == frozenset({1})

    k5 = complete_graph(5)
    h = shrink_connected_cover(k5, {0, 1, 2}, {3, 4})
    assert len(h) == 1


def test_shrink_postconditions_random():
    checked = 0
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(2, 10)
        g = seeded_graph(40000 + seed, n, 0.5)
        i_set = frozenset(rng.sample(range(n), rng.randint(1, min(3, n - 1))))
        keep = sorted(set(range(n)) - i_set)
        comps = connected_components(g.induced_subgraph(keep))
        candidates = []
        for comp in comps:
            orig = frozenset(keep[x] for x in comp)
            if all(g.adjacency[v] & orig for v in i_set):
                candidates.append(orig)
        if not candidates:
            continue
        c_set = candidates[0]
        h = shrink_connected_cover(g, i_set, c_set)
        assert h <= c_set
        assert g.is_connected_set(h)
        assert all(g.adjacency[v] & h for v in i_set)
        assert clique_number(g.induced_subgraph(h)) <= 3
        checked += 1
    assert checked >= 50


def test_shrink_rejects_bad_inputs():
    g = path_graph(5)
    with pytest.raises(ValueError, match="attachment set has 4"):
        shrink_connected_cover(complete_graph(6), {0, 1, 2, 3}, {4, 5})
    with pytest.raises(ValueError, match="empty"):
        shrink_connected_cover(g, {0}, set())
    with pytest.raises(ValueError, match="overlap"):
        shrink_connected_cover(g, {1}, {1, 2})
    with pytest.raises(ValueError, match="connected"):
        shrink_connected_cover(path_graph(5), {1}, {0, 2})
    with pytest.raises(ValueError, match="not maximal"):
        shrink_connected_cover(path_graph(5), {1}, {2, 3})
    with pytest.raises(ValueError, match="no neighbor"):
        shrink_connected_cover(Graph.from_edges(3, [(1, 2)]), {0}, {1, 2})


def test_restrict_model_full_and_single():
    g = seeded_graph(77, 6, 0.5)
    ident = identity_model(g)
    full = restrict_model(ident, set(range(g.n)))
    assert full.branch_sets == ident.branch_sets
    assert type(full) is MinorModel

    single = restrict_model(ident, {3})
    assert single.pattern == empty_graph(1)
    assert single.branch_sets == {0: frozenset({3})}


def test_restrict_model_rejects_bad_vertices():
    g = path_graph(3)
    with pytest.raises(ModelValidationError):
        restrict_model(identity_model(g), {0, 9})


def test_compose_models():
    # C5 -> C4 (one contraction), then C4 inside itself.
    inner = find_induced_minor_model(cycle_graph(5), cycle_graph(4))
    outer = identity_model(cycle_graph(4))
    composed = compose_models(outer, inner)
    assert composed.host == cycle_graph(5)
    assert validate_model(composed, induced=False) == []
    with pytest.raises(ModelValidationError):
        compose_models(identity_model(path_graph(3)), inner)


def test_lsg_canonical_model_small():
    m = lsg_canonical_model(complete_graph(2))
    assert m.host == complete_graph(2)
    assert m.branch_sets == {0: frozenset({0}), 1: frozenset({1})}

    m22 = lsg_canonical_model(complete_bipartite(2, 2))
    assert m22.host.n == 8
    assert validate_model(m22, induced=True) == []

    m33 = lsg_canonical_model(complete_bipartite(3, 3))
    assert validate_model(m33, induced=True) == []


def test_lsg_rejects_isolated_vertices():
    with pytest.raises(ValueError, match="isolated"):
        lsg_canonical_model(Graph.from_edges(3, [(0, 1)]))


def test_subdivision_model_validates():
    for g in (cycle_graph(4), wall(1), seeded_graph(3, 6, 0.6)):
        m = subdivision_model(g)
        assert validate_model(m, induced=True) == []
        assert m.host.n == g.n + g.m


def test_model_text_round_trip():
    m = find_induced_minor_model(cycle_graph(5), cycle_graph(4))
    text = model_to_text(m)
    parsed = model_from_text(text)
    assert parsed.host == m.host
    assert parsed.pattern == m.pattern
    assert parsed.branch_sets == m.branch_sets


def test_model_text_rejects_malformed():
    from twominor import FormatError

    with pytest.raises(FormatError):
        model_from_text("0: 1 2\n")  # missing headers
    with pytest.raises(FormatError):
        model_from_text("host Bw\npattern Bw\nx: 1\n")
    with pytest.raises(FormatError):
        model_from_text("host Bw\npattern Bw\n0: 1\n0: 2\n")


def test_search_metamorphic_consistency():
    # Above the oracle's reach, implication properties still pin the searches:
    # induced containment implies plain, and plain containment is monotone
    # under pattern edge deletion and host edge addition.
    for seed in range(25):
        rng = random.Random(880000 + seed)
        hn = rng.randint(6, 11)
        pn = rng.randint(2, 5)
        host = seeded_graph(880000 + seed, hn, rng.choice([0.3, 0.5]))
        pattern = seeded_graph(990000 + seed, pn, 0.5)
        plain = find_minor_model(host, pattern)
        induced = find_induced_minor_model(host, pattern)
        if induced is not None:
            assert plain is not None
        if plain is None:
            assert induced is None
        if plain is not None and pattern.m:
            e = sorted(pattern.edges)[rng.randrange(pattern.m)]
            weaker = Graph(pn, pattern.edges - {e})
            assert find_minor_model(host, weaker) is not None
        if plain is not None and host.m < hn * (hn - 1) // 2:
            pairs = [
                (u, v)
                for u in range(hn)
                for v in range(u + 1, hn)
                if (u, v) not in host.edges
            ]
            bigger = Graph(hn, host.edges | {pairs[rng.randrange(len(pairs))]})
            assert find_minor_model(bigger, pattern) is not None


def test_connected_set_enumeration_is_complete_and_duplicate_free():
    import itertools

    from twominor.minors import _connected_sets

    for seed in range(40):
        g = seeded_graph(60000 + seed, 6, 0.4)
        masks = g.adjacency_masks
        full = (1 << g.n) - 1
        produced = []
        for root in range(g.n):
            allowed = full & ~((1 << root) - 1)
            produced.extend(_connected_sets(masks, allowed, root, g.n))
        expected = []
        for r in range(1, g.n + 1):
            for sub in itertools.combinations(range(g.n), r):
                if g.is_connected_set(sub):
                    expected.append(sum(1 << v for v in sub))
        assert sorted(produced) == sorted(expected)
