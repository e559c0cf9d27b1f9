"""Immutable simple graphs, standard constructions, and exact small-graph invariants.

Vertices are always 0..n-1.  Graph equality is label-sensitive; there is no
isomorphism machinery anywhere in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ResourceLimitError

Edge = tuple[int, int]

CLIQUE_VERTEX_CAP = 64


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges, vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) is not a sorted pair of vertices below {self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge orientation and dropping duplicates."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; bit v of entry u is set iff uv is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def set_neighborhood(self, vs: Iterable[int]) -> frozenset[int]:
        """Open neighborhood N(S): vertices outside S with a neighbor in S."""
        s = set(vs)
        out: set[int] = set()
        for v in s:
            out |= self.adjacency[v]
        return frozenset(out - s)

    def induced_subgraph(self, vs: Iterable[int]) -> "Graph":
        """Subgraph induced by vs, relabeled to 0..|vs|-1 in sorted vertex order."""
        order = sorted(set(vs))
        index = {v: i for i, v in enumerate(order)}
        edges = {(index[u], index[v]) for u, v in self.edges if u in index and v in index}
        return Graph(len(order), frozenset(edges))

    def complement(self) -> "Graph":
        edges = {
            (u, v)
            for u, v in itertools.combinations(range(self.n), 2)
            if (u, v) not in self.edges
        }
        return Graph(self.n, frozenset(edges))

    def is_connected_set(self, vs: Iterable[int]) -> bool:
        """True iff the subgraph induced by vs is connected (empty set counts as connected)."""
        s = set(vs)
        if not s:
            return True
        start = next(iter(s))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u] & s:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == s

    def is_connected(self) -> bool:
        return self.n == 0 or self.is_connected_set(range(self.n))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = {(i, i + 1) for i in range(n - 1)}
    edges.add((0, n - 1))
    return Graph(n, frozenset(edges))


def complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph; one part is 0..m-1, the other m..m+n-1."""
    if m < 0 or n < 0:
        raise ValueError("part sizes must be nonnegative")
    edges = frozenset((a, m + b) for a in range(m) for b in range(n))
    return Graph(m + n, edges)


def wall(k: int) -> Graph:
    """The k-by-k brick wall: subcubic, with treewidth at least k.

    Built from the (k+1) x (2k+2) grid by keeping the vertical edge between
    rows r and r+1 at column c exactly when c = r (mod 2), then dropping the
    two degree-1 corner leftovers.  Vertices are relabeled 0..n-1 row-major.
    """
    if k < 1:
        raise ValueError("wall size must be at least 1")
    rows, cols = k + 1, 2 * k + 2

    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges: set[Edge] = set()
    for r in range(rows):
        for c in range(cols - 1):
            edges.add((vid(r, c), vid(r, c + 1)))
    for r in range(rows - 1):
        for c in range(cols):
            if c % 2 == r % 2:
                edges.add((vid(r, c), vid(r + 1, c)))

    degree = [0] * (rows * cols)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    keep = sorted(v for v in range(rows * cols) if degree[v] >= 2)
    index = {v: i for i, v in enumerate(keep)}
    kept_edges = {
        (index[u], index[v]) for u, v in edges if u in index and v in index
    }
    return Graph(len(keep), frozenset(kept_edges))


def subdivide_once(g: Graph) -> Graph:
    """Subdivide every edge exactly once.

    Original vertices keep their labels; the midpoint of the i-th edge in
    sorted edge order gets label n+i, so the layout is reproducible.
    """
    sorted_edges = sorted(g.edges)
    new_edges: set[Edge] = set()
    for i, (u, v) in enumerate(sorted_edges):
        mid = g.n + i
        new_edges.add((u, mid))
        new_edges.add((v, mid))
    return Graph(g.n + len(sorted_edges), frozenset(new_edges))


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Line graph of g plus the edge order defining its vertex labels.

    Vertex i of the result corresponds to the i-th edge of g in sorted order;
    two vertices are adjacent iff the underlying edges share an endpoint.
    """
    order = tuple(sorted(g.edges))
    incident: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, (u, v) in enumerate(order):
        incident[u].append(i)
        incident[v].append(i)
    edges: set[Edge] = set()
    for ids in incident.values():
        for a, b in itertools.combinations(ids, 2):
            edges.add((a, b) if a < b else (b, a))
    return Graph(len(order), frozenset(edges)), order


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv (merge v into u) and relabel to 0..n-2."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    keep = [w for w in range(g.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    edges: set[Edge] = set()
    for a, b in g.edges:
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 == b2:
            continue
        x, y = index[a2], index[b2]
        edges.add((x, y) if x < y else (y, x))
    return Graph(g.n - 1, frozenset(edges))


def connected_components(g: Graph) -> list[list[int]]:
    """Partition into maximal connected vertex sets, ordered by smallest vertex."""
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def clique_number(g: Graph) -> int:
    """Exact clique number via branch and bound with a greedy-coloring bound."""
    if g.n > CLIQUE_VERTEX_CAP:
        raise ResourceLimitError(
            f"clique number is exact only up to {CLIQUE_VERTEX_CAP} vertices; got {g.n}"
        )
    if g.n == 0:
        return 0
    masks = g.adjacency_masks
    best = 1

    def color_order(p: int) -> list[tuple[int, int]]:
        # Greedy coloring of the candidate set; a vertex with color c cannot
        # extend a clique beyond size (current + c).
        out: list[tuple[int, int]] = []
        color = 0
        rest = p
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                out.append((v, color))
                rest &= ~(1 << v)
                avail &= ~(1 << v) & ~masks[v]
        return out

    def expand(size: int, p: int) -> None:
        nonlocal best
        if p == 0:
            if size > best:
                best = size
            return
        ordered = color_order(p)
        for v, c in reversed(ordered):
            if size + c <= best:
                return
            expand(size + 1, p & masks[v])
            p &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def independence_number(g: Graph) -> int:
    """Exact independence number, computed as the clique number of the complement."""
    return clique_number(g.complement())


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise nonadjacent neighbors."""
    for v in range(g.n):
        nbrs = sorted(g.adjacency[v])
        for a, b, c in itertools.combinations(nbrs, 3):
            if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                return False
    return True
