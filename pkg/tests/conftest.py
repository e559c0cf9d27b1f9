"""Shared independent oracles for the test suite.

These deliberately avoid the library's own algorithms: treewidth by exhausting
elimination orderings, clique number by subset enumeration, minor containment
by enumerating all vertex assignments.
"""

import itertools
import random

from twominor import Graph


def oracle_treewidth(g: Graph) -> int:
    """Minimum over all elimination orderings of the maximum elimination degree.

    Plain recursive enumeration; the only shortcut is abandoning a prefix once
    its width already reaches the best complete ordering seen, which cannot
    change the minimum.
    """
    n = g.n
    if n == 0:
        return -1
    best = n - 1  # any ordering achieves at most n-1

    def rec(masks, remaining, width):
        nonlocal best
        if width >= best:
            return
        if not remaining:
            best = width
            return
        for v in remaining:
            d = masks[v].bit_count()
            w2 = max(width, d)
            if w2 >= best:
                continue
            nm = list(masks)
            nb = nm[v]
            rest = nb
            while rest:
                ub = rest & -rest
                rest ^= ub
                u = ub.bit_length() - 1
                nm[u] = (nm[u] | nb) & ~(1 << u) & ~(1 << v)
            nm[v] = 0
            rec(nm, [x for x in remaining if x != v], w2)

    rec(list(g.adjacency_masks), list(range(n)), -1)
    return best


def oracle_clique_number(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                return r
    return best


def oracle_contains_minor(host: Graph, pattern: Graph, induced: bool) -> bool:
    """Enumerate every map host vertex -> pattern vertex or 'deleted'."""
    k, n = pattern.n, host.n
    if k == 0:
        return True
    if k > n:
        return False
    for assign in itertools.product(range(k + 1), repeat=n):
        sets = [frozenset(i for i in range(n) if assign[i] == v) for v in range(k)]
        if any(not s for s in sets):
            continue
        if any(not host.is_connected_set(s) for s in sets):
            continue
        ok = True
        for u in range(k):
            for v in range(u + 1, k):
                touching = any(host.has_edge(a, b) for a in sets[u] for b in sets[v])
                if pattern.has_edge(u, v) and not touching:
                    ok = False
                    break
                if induced and not pattern.has_edge(u, v) and touching:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def seeded_graph(seed: int, n: int, p: float) -> Graph:
    rng = random.Random(seed)
    edges = frozenset(
        (u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p
    )
    return Graph(n, edges)
