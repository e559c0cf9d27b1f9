"""Exact treewidth with certifying tree decompositions, plus wall-subdivision witnesses.

The solver is exact at every size it accepts.  It first applies the classic
safe reductions (simplicial vertices at any degree, and the degree-2 bypass
once a lower bound of 2 is established), then runs a subset dynamic program
over elimination orderings on the reduced core.  Cores too large for the DP
fall back to an exact branch-and-bound over elimination orderings; anything
beyond that cap raises ResourceLimitError rather than approximating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import FormatError, ResourceLimitError
from .graphs import Graph, wall

DP_CORE_CAP = 20
BNB_CORE_CAP = 40
RAW_VERTEX_CAP = 512
WALL_SEARCH_CAP = 3


@dataclass
class TreeDecomposition:
    """Tree of bags; `parent` maps each node to its parent (None at the root)."""

    bags: dict[int, frozenset[int]]
    parent: dict[int, int | None]

    @property
    def width(self) -> int:
        if not self.bags:
            return -1
        return max(len(b) for b in self.bags.values()) - 1

    def tree_edges(self) -> list[tuple[int, int]]:
        out = []
        for node, par in self.parent.items():
            if par is not None:
                out.append((min(node, par), max(node, par)))
        return sorted(out)


def validate_decomposition(g: Graph, t: TreeDecomposition) -> list[str]:
    """All tree-decomposition violations for g, empty iff t is valid."""
    violations: list[str] = []
    nodes = set(t.bags)
    if set(t.parent) != nodes:
        violations.append("parent map and bag map have different node sets")
        return violations

    roots = [x for x in nodes if t.parent[x] is None]
    for x in nodes:
        p = t.parent[x]
        if p is not None and p not in nodes:
            violations.append(f"node {x} has unknown parent {p}")
    if nodes and len(roots) != 1:
        violations.append(f"decomposition has {len(roots)} roots, expected exactly 1")
    children: dict[int, list[int]] = {x: [] for x in nodes}
    for x in nodes:
        p = t.parent[x]
        if p in children:
            children[p].append(x)
    if nodes and len(roots) == 1:
        seen = {roots[0]}
        stack = [roots[0]]
        while stack:
            u = stack.pop()
            for w in children[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        stray = sorted(nodes - seen)
        if stray:
            violations.append(f"nodes {stray} are not connected to the root")

    for x in sorted(nodes):
        for v in sorted(t.bags[x]):
            if not 0 <= v < g.n:
                violations.append(f"bag of node {x} contains out-of-range vertex {v}")

    for v in range(g.n):
        if not any(v in bag for bag in t.bags.values()):
            violations.append(f"vertex {v} is in no bag")

    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in t.bags.values()):
            violations.append(f"edge ({u}, {v}) is covered by no bag")

    # Adjacency of the tree, for the connected-subtree condition.
    tree_adj: dict[int, set[int]] = {x: set() for x in nodes}
    for x in nodes:
        p = t.parent[x]
        if p in tree_adj:
            tree_adj[x].add(p)
            tree_adj[p].add(x)
    for v in range(g.n):
        holding = {x for x in nodes if v in t.bags[x]}
        if not holding:
            continue
        start = min(holding)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in tree_adj[u] & holding:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != holding:
            violations.append(f"bags containing vertex {v} do not form a connected subtree")

    return violations


def _copy_adj(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    return {v: set(s) for v, s in adj.items()}


def _is_clique(adj: dict[int, set[int]], vs: set[int]) -> bool:
    for a in vs:
        for b in vs:
            if a < b and b not in adj[a]:
                return False
    return True


def _minor_min_width(adj: dict[int, set[int]]) -> int:
    """Treewidth lower bound: max over contraction steps of the minimum degree."""
    work = _copy_adj(adj)
    low = -1
    while work:
        v = min(work, key=lambda u: (len(work[u]), u))
        d = len(work[v])
        if d > low:
            low = d
        if d == 0:
            del work[v]
            continue
        u = min(work[v], key=lambda w: (len(work[v] & work[w]), w))
        merged = (work[v] | work[u]) - {u, v}
        for w in work[v]:
            work[w].discard(v)
        del work[v]
        work[u] = merged
        for w in merged:
            work[w].add(u)
    return low


def _eliminate(adj: dict[int, set[int]], v: int) -> None:
    nbrs = adj[v]
    for a in nbrs:
        adj[a] |= nbrs - {a}
        adj[a].discard(v)
    del adj[v]


def _min_fill_order(adj: dict[int, set[int]]) -> tuple[int, list[int]]:
    """Greedy min-fill elimination: an upper bound plus the ordering achieving it."""
    work = _copy_adj(adj)
    order: list[int] = []
    width = -1
    while work:
        def fill(u: int) -> int:
            nbrs = work[u]
            return sum(
                1 for a, b in itertools.combinations(sorted(nbrs), 2) if b not in work[a]
            )

        v = min(work, key=lambda u: (fill(u), u))
        width = max(width, len(work[v]))
        _eliminate(work, v)
        order.append(v)
    return width, order


def _reduce(
    adj: dict[int, set[int]], low: int
) -> tuple[int, list[tuple[int, frozenset[int]]]]:
    """Apply safe reductions in place; return the updated lower bound and a replay log.

    Each log entry (v, req) means: vertex v was removed while its then-current
    neighborhood was req; re-attaching a bag req|{v} at any bag containing req
    turns a decomposition of the reduced graph into one of the original.
    """
    log: list[tuple[int, frozenset[int]]] = []
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            nbrs = adj[v]
            if _is_clique(adj, nbrs):
                if len(nbrs) > low:
                    low = len(nbrs)
                log.append((v, frozenset(nbrs)))
                for a in nbrs:
                    adj[a].discard(v)
                del adj[v]
                changed = True
                break
            if len(nbrs) == 2 and low >= 2:
                a, b = sorted(nbrs)
                log.append((v, frozenset((a, b))))
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
                break
    return low, log


def _dp_elimination(masks: list[int]) -> tuple[int, list[int]]:
    """Optimal elimination ordering by dynamic programming over vertex subsets.

    State S is the set of already-eliminated vertices; eliminating v next costs
    the number of vertices outside S|{v} adjacent to v directly or through S.
    """
    n = len(masks)
    full = (1 << n) - 1
    inf = n + 1
    f = [inf] * (full + 1)
    f[0] = -1
    choice = [-1] * (full + 1)
    for s in range(full + 1):
        fs = f[s]
        if fs == inf:
            continue
        # Outside-neighborhoods of the connected components of S.
        comp_nbrs: list[int] = []
        rem = s
        while rem:
            seed = rem & -rem
            comp = seed
            reach = masks[seed.bit_length() - 1]
            frontier = reach & s & ~comp
            while frontier:
                comp |= frontier
                add = 0
                ff = frontier
                while ff:
                    vb = ff & -ff
                    add |= masks[vb.bit_length() - 1]
                    ff ^= vb
                reach |= add
                frontier = reach & s & ~comp
            comp_nbrs.append(reach & ~s)
            rem &= ~comp
        out = ~s & full
        vv = out
        while vv:
            vb = vv & -vv
            vv ^= vb
            v = vb.bit_length() - 1
            q = masks[v]
            for cn in comp_nbrs:
                if cn & vb:
                    q |= cn
            q &= ~s & ~vb
            cost = q.bit_count()
            w = fs if fs > cost else cost
            t = s | vb
            if w < f[t]:
                f[t] = w
                choice[t] = v
    order_rev: list[int] = []
    t = full
    while t:
        v = choice[t]
        order_rev.append(v)
        t &= ~(1 << v)
    order_rev.reverse()
    return f[full], order_rev


def _bnb_elimination(adj: dict[int, set[int]]) -> tuple[int, list[int]]:
    """Exact branch and bound over elimination orderings for larger cores."""
    ub, ub_order = _min_fill_order(adj)
    lb = _minor_min_width(adj)
    best: list = [ub, ub_order]
    if lb >= ub:
        return ub, ub_order
    seen: dict[frozenset[int], int] = {}

    def rec(work: dict[int, set[int]], order: list[int], g: int) -> None:
        if g >= best[0]:
            return
        if len(work) <= 1:
            # A single leftover vertex is eliminated at degree 0.
            cand = g if not work else max(g, 0)
            if cand < best[0]:
                best[0] = cand
                best[1] = order + sorted(work)
            return
        key = frozenset(work)
        prev = seen.get(key)
        if prev is not None and prev <= g:
            return
        seen[key] = g
        candidates = sorted(work)
        for v in candidates:
            if _is_clique(work, work[v]):
                # Eliminating a simplicial vertex first is always optimal.
                candidates = [v]
                break
        for v in candidates:
            g1 = max(g, len(work[v]))
            if g1 >= best[0]:
                continue
            child = _copy_adj(work)
            _eliminate(child, v)
            if max(g1, _minor_min_width(child)) >= best[0]:
                continue
            rec(child, order + [v], g1)

    rec(_copy_adj(adj), [], -1)
    return best[0], best[1]


def _decomposition_from_ordering(
    adj: dict[int, set[int]], order: list[int]
) -> tuple[dict[int, frozenset[int]], dict[int, int | None]]:
    work = _copy_adj(adj)
    elim: list[tuple[int, frozenset[int]]] = []
    for v in order:
        elim.append((v, frozenset(work[v])))
        _eliminate(work, v)
    bags: dict[int, frozenset[int]] = {}
    parent: dict[int, int | None] = {}
    for i in range(len(order) - 1, -1, -1):
        v, nbrs = elim[i]
        node = len(bags)
        bags[node] = nbrs | {v}
        if node == 0:
            parent[node] = None
        else:
            attach = next(x for x in range(node) if nbrs <= bags[x])
            parent[node] = attach
    return bags, parent


def exact_treewidth(g: Graph) -> tuple[int, TreeDecomposition]:
    """Exact treewidth and a certifying tree decomposition.

    The empty graph has width -1 by the |bag|-1 convention.  Inputs whose
    reduced core exceeds the exact solver caps raise ResourceLimitError.
    """
    if g.n == 0:
        return -1, TreeDecomposition({0: frozenset()}, {0: None})
    if g.n > RAW_VERTEX_CAP:
        raise ResourceLimitError(
            f"graph has {g.n} vertices; the solver considers at most {RAW_VERTEX_CAP}"
        )
    adj = {v: set(g.adjacency[v]) for v in range(g.n)}
    low = _minor_min_width(adj)
    low, log = _reduce(adj, low)

    if not adj:
        if log:
            v, req = log.pop()  # last removal saw an empty graph, so req is empty
            bags: dict[int, frozenset[int]] = {0: req | {v}}
        else:
            bags = {0: frozenset()}
        parent: dict[int, int | None] = {0: None}
        width = low
    else:
        core = sorted(adj)
        c = len(core)
        if c <= DP_CORE_CAP:
            index = {v: i for i, v in enumerate(core)}
            masks = [0] * c
            for v in core:
                for w in adj[v]:
                    masks[index[v]] |= 1 << index[w]
            w_core, order_idx = _dp_elimination(masks)
            order = [core[i] for i in order_idx]
        elif c <= BNB_CORE_CAP:
            w_core, order = _bnb_elimination(adj)
        else:
            raise ResourceLimitError(
                f"graph reduces to a {c}-vertex core; the exact solver caps at {BNB_CORE_CAP}"
            )
        bags, parent = _decomposition_from_ordering(adj, order)
        width = max(low, w_core)

    for v, req in reversed(log):
        attach = next(x for x in sorted(bags) if req <= bags[x])
        node = len(bags)
        bags[node] = req | {v}
        parent[node] = attach

    return width, TreeDecomposition(bags, parent)


def decomposition_to_pace(t: TreeDecomposition, n: int) -> str:
    """Serialize in the PACE .td style: 1-based bag ids and 1-based vertices."""
    order = sorted(t.bags)
    ids = {node: i + 1 for i, node in enumerate(order)}
    max_bag = max((len(t.bags[x]) for x in order), default=0)
    lines = [f"s td {len(order)} {max_bag} {n}"]
    for node in order:
        verts = " ".join(str(v + 1) for v in sorted(t.bags[node]))
        lines.append(f"b {ids[node]} {verts}".rstrip())
    for a, b in t.tree_edges():
        lines.append(f"{ids[a]} {ids[b]}")
    return "\n".join(lines) + "\n"


def decomposition_from_pace(text: str) -> tuple[TreeDecomposition, int]:
    """Parse a PACE-style .td file; returns the decomposition and the declared n."""
    header: tuple[int, int, int] | None = None
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise FormatError("multiple solution lines")
            if len(parts) != 5 or parts[1] != "td":
                raise FormatError(f"malformed solution line {line!r}")
            header = (int(parts[2]), int(parts[3]), int(parts[4]))
        elif parts[0] == "b":
            if len(parts) < 2:
                raise FormatError(f"malformed bag line {line!r}")
            bag_id = int(parts[1])
            if bag_id in bags:
                raise FormatError(f"duplicate bag id {bag_id}")
            bags[bag_id] = frozenset(int(v) - 1 for v in parts[2:])
        else:
            if len(parts) != 2:
                raise FormatError(f"malformed tree edge line {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    if header is None:
        raise FormatError("missing 's td' line")
    n_bags, max_bag, n = header
    if len(bags) != n_bags:
        raise FormatError(f"declared {n_bags} bags but found {len(bags)}")
    actual_max = max((len(b) for b in bags.values()), default=0)
    if actual_max != max_bag:
        raise FormatError(f"declared max bag size {max_bag} but found {actual_max}")
    adj: dict[int, set[int]] = {x: set() for x in bags}
    for a, b in edges:
        if a not in bags or b not in bags:
            raise FormatError(f"tree edge ({a}, {b}) references an unknown bag")
        adj[a].add(b)
        adj[b].add(a)
    parent: dict[int, int | None] = {}
    if bags:
        root = min(bags)
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            for w in sorted(adj[u]):
                if w not in parent:
                    parent[w] = u
                    stack.append(w)
        if len(parent) != len(bags):
            raise FormatError("tree edges do not connect all bags")
    return TreeDecomposition(bags, parent), n


def _find_topological_embedding(
    host: Graph, pattern: Graph
) -> tuple[dict[int, int], dict[tuple[int, int], list[int]]] | None:
    """Injective vertex images plus internally disjoint paths realizing pattern in host."""
    if pattern.n == 0:
        return {}, {}
    start = max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))
    order: list[int] = []
    seen = {start}
    queue = [start]
    while queue:
        u = queue.pop(0)
        order.append(u)
        for w in sorted(pattern.adjacency[u]):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    for v in range(pattern.n):  # isolated pattern vertices, if any
        if v not in seen:
            order.append(v)

    img: dict[int, int] = {}
    used: set[int] = set()
    paths: dict[tuple[int, int], list[int]] = {}

    def simple_paths(src: int, dst: int):
        allowed = set(range(host.n)) - used
        allowed.add(src)
        allowed.add(dst)
        dist = {dst: 0}
        frontier = [dst]
        while frontier:
            nxt = []
            for u in frontier:
                for w in host.adjacency[u]:
                    if w in allowed and w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if src not in dist:
            return
        path = [src]
        onpath = {src}

        def go(u: int):
            for w in sorted(host.adjacency[u], key=lambda x: (dist.get(x, host.n + 1), x)):
                if w == dst:
                    yield path + [dst]
                elif w in dist and w not in used and w not in onpath:
                    path.append(w)
                    onpath.add(w)
                    yield from go(w)
                    path.pop()
                    onpath.remove(w)

        yield from go(src)

    def route(p: int, src: int, targets: list[int], j: int, i: int) -> bool:
        if j == len(targets):
            return place(i + 1)
        dst = img[targets[j]]
        for path in simple_paths(src, dst):
            interior = path[1:-1]
            used.update(interior)
            paths[(p, targets[j])] = path
            if host.n - len(used) >= len(order) - i - 1 and route(p, src, targets, j + 1, i):
                return True
            used.difference_update(interior)
            del paths[(p, targets[j])]
        return False

    def place(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        targets = [q for q in sorted(pattern.adjacency[p]) if q in img]
        for cand in range(host.n):
            if cand in used or host.degree(cand) < pattern.degree(p):
                continue
            img[p] = cand
            used.add(cand)
            if route(p, cand, targets, 0, i):
                return True
            del img[p]
            used.remove(cand)
        return False

    if place(0):
        return img, paths
    return None


def _wall_embedding(g: Graph, k: int):
    """Internal: wall-subdivision witness as (model pieces, subdivision subgraph)."""
    from .minors import MinorModel, validate_model

    pattern = wall(k)
    if g.n < pattern.n or g.m < pattern.m:
        return None
    # Degree counts must embed: images of degree-d wall vertices need degree >= d.
    host_degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    pattern_degrees = sorted((pattern.degree(v) for v in range(pattern.n)), reverse=True)
    if any(h < p for h, p in zip(host_degrees, pattern_degrees)):
        return None
    # Subdivision leaves treewidth unchanged and subgraphs cannot exceed the
    # host's width, so a witness forces tw(g) >= tw(wall(k)).
    try:
        if exact_treewidth(g)[0] < exact_treewidth(pattern)[0]:
            return None
    except ResourceLimitError:
        pass
    found = _find_topological_embedding(g, pattern)
    if found is None:
        return None
    img, paths = found
    branch: dict[int, set[int]] = {v: {img[v]} for v in range(pattern.n)}
    sub_vertices: set[int] = set(img.values())
    sub_edges: set[tuple[int, int]] = set()
    for (p, _q), path in paths.items():
        branch[p].update(path[1:-1])
        sub_vertices.update(path)
        for a, b in zip(path, path[1:]):
            sub_edges.add((a, b) if a < b else (b, a))
    model = MinorModel(
        pattern=pattern,
        host=g,
        branch_sets={v: frozenset(s) for v, s in branch.items()},
    )
    problems = validate_model(model, induced=False)
    if problems:
        raise AssertionError(f"internal witness failed validation: {problems}")
    return model, sub_vertices, sub_edges


def contains_wall_subdivision(g: Graph, k: int):
    """Witness (as a minor model of the k-wall in g) that g contains a subdivided wall.

    Because walls are subcubic, minor containment coincides with
    subdivision-as-subgraph containment, so the returned model certifies the
    topological witness.  Returns None when the exhaustive search rules one out.
    """
    if k < 1:
        raise ValueError("wall size must be at least 1")
    if k > WALL_SEARCH_CAP:
        raise ResourceLimitError(f"wall-subdivision search is capped at k = {WALL_SEARCH_CAP}")
    found = _wall_embedding(g, k)
    if found is None:
        return None
    return found[0]
