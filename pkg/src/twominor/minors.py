"""Minor and induced-minor models: validation, exhaustive search, minimization.

A model maps every pattern vertex to a nonempty connected branch set in the
host; branch sets are pairwise disjoint, pattern edges must be realized by a
host edge between the corresponding sets, and in the induced variant pattern
non-edges must not be.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModelValidationError, ResourceLimitError
from .graphs import Graph, clique_number, line_graph, subdivide_once

SEARCH_HOST_CAP = 14
SEARCH_PATTERN_CAP = 6
SHRINK_ATTACHMENT_CAP = 3


@dataclass
class MinorModel:
    pattern: Graph
    host: Graph
    branch_sets: dict[int, frozenset[int]]

    def branch_union(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.branch_sets.values():
            out |= s
        return frozenset(out)


@dataclass
class InducedMinorModel(MinorModel):
    pass


def identity_model(g: Graph) -> InducedMinorModel:
    """The model of g in itself with singleton branch sets."""
    return InducedMinorModel(
        pattern=g, host=g, branch_sets={v: frozenset((v,)) for v in range(g.n)}
    )


def validate_model(m: MinorModel, induced: bool | None = None) -> list[str]:
    """All violations of the (induced-)minor-model invariants; empty iff valid.

    When `induced` is omitted it is inferred from the model's type.
    """
    if induced is None:
        induced = isinstance(m, InducedMinorModel)
    violations: list[str] = []
    pat, host = m.pattern, m.host
    if set(m.branch_sets) != set(range(pat.n)):
        violations.append("branch sets do not cover exactly the pattern vertices")
        return violations
    for v in range(pat.n):
        s = m.branch_sets[v]
        if not s:
            violations.append(f"branch set of pattern vertex {v} is empty")
            continue
        bad = sorted(x for x in s if not 0 <= x < host.n)
        if bad:
            violations.append(f"branch set of pattern vertex {v} contains non-host vertices {bad}")
            continue
        if not host.is_connected_set(s):
            violations.append(f"branch set of pattern vertex {v} is not connected in the host")
    for u in range(pat.n):
        for v in range(u + 1, pat.n):
            su, sv = m.branch_sets.get(u, frozenset()), m.branch_sets.get(v, frozenset())
            overlap = sorted(su & sv)
            if overlap:
                violations.append(
                    f"branch sets of pattern vertices {u} and {v} overlap on {overlap}"
                )
                continue
            touching = any(host.has_edge(a, b) for a in su for b in sv)
            if pat.has_edge(u, v) and not touching:
                violations.append(f"pattern edge ({u}, {v}) has no host edge between branch sets")
            if induced and not pat.has_edge(u, v) and touching:
                violations.append(
                    f"pattern non-edge ({u}, {v}) has a host edge between branch sets"
                )
    return violations


def _require_valid(m: MinorModel, induced: bool, who: str) -> None:
    problems = validate_model(m, induced=induced)
    if problems:
        raise ModelValidationError(f"{who} requires a valid model: {problems[0]}")


def _mask_neighbors(masks: tuple[int, ...], s: int) -> int:
    out = 0
    rest = s
    while rest:
        vb = rest & -rest
        out |= masks[vb.bit_length() - 1]
        rest ^= vb
    return out & ~s


def _connected_sets(masks: tuple[int, ...], allowed: int, root: int, max_size: int):
    """All connected sets containing `root` inside `allowed`, each yielded once.

    Standard rooted enumeration: extension candidates are processed in
    ascending order, and once a candidate has been fully explored it is
    forbidden for the rest of this level, which prevents duplicates.
    """
    rootbit = 1 << root

    def rec(s: int, ext: int, forbidden: int):
        yield s
        if s.bit_count() >= max_size:
            return
        while ext:
            vb = ext & -ext
            ext ^= vb
            grown = s | vb
            new_ext = (ext | (_mask_neighbors(masks, grown) & allowed)) & ~forbidden & ~grown
            yield from rec(grown, new_ext, forbidden)
            forbidden |= vb

    first_ext = masks[root] & allowed & ~rootbit
    yield from rec(rootbit, first_ext, 0)


def _search_model(host: Graph, pattern: Graph, induced: bool) -> dict[int, frozenset[int]] | None:
    if host.n > SEARCH_HOST_CAP:
        raise ResourceLimitError(
            f"minor-model search caps the host at {SEARCH_HOST_CAP} vertices; got {host.n}"
        )
    if pattern.n > SEARCH_PATTERN_CAP:
        raise ResourceLimitError(
            f"minor-model search caps the pattern at {SEARCH_PATTERN_CAP} vertices; got {pattern.n}"
        )
    if pattern.n == 0:
        return {}
    if host.n < pattern.n:
        return None

    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    masks = host.adjacency_masks
    full = (1 << host.n) - 1
    k = pattern.n
    prev_nbrs: list[list[int]] = []
    prev_non: list[list[int]] = []
    for i, p in enumerate(order):
        nbrs, non = [], []
        for j in range(i):
            (nbrs if pattern.has_edge(p, order[j]) else non).append(j)
        prev_nbrs.append(nbrs)
        prev_non.append(non)

    assigned = [0] * k

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        avail = full & ~used
        budget = host.n - used.bit_count() - (k - i - 1)
        if budget < 1:
            return False
        rest = avail
        while rest:
            rootbit = rest & -rest
            rest ^= rootbit
            root = rootbit.bit_length() - 1
            # Min-vertex convention: sets rooted at `root` avoid smaller labels.
            allowed = avail & ~(rootbit - 1)
            for s in _connected_sets(masks, allowed, root, budget):
                ns = _mask_neighbors(masks, s)
                ok = all(ns & assigned[j] for j in prev_nbrs[i])
                if ok and induced:
                    ok = not any(ns & assigned[j] for j in prev_non[i])
                if ok:
                    assigned[i] = s
                    if rec(i + 1, used | s):
                        return True
        return False

    if not rec(0, 0):
        return None
    out: dict[int, frozenset[int]] = {}
    for i, p in enumerate(order):
        s = assigned[i]
        members = set()
        while s:
            vb = s & -s
            members.add(vb.bit_length() - 1)
            s ^= vb
        out[p] = frozenset(members)
    return out


def find_induced_minor_model(host: Graph, pattern: Graph) -> InducedMinorModel | None:
    """Exhaustive search for an induced minor model; None iff none exists."""
    sets = _search_model(host, pattern, induced=True)
    if sets is None:
        return None
    model = InducedMinorModel(pattern=pattern, host=host, branch_sets=sets)
    assert not validate_model(model, induced=True)
    return model


def find_minor_model(host: Graph, pattern: Graph) -> MinorModel | None:
    """Exhaustive search for a plain minor model; None iff none exists."""
    sets = _search_model(host, pattern, induced=False)
    if sets is None:
        return None
    model = MinorModel(pattern=pattern, host=host, branch_sets=sets)
    assert not validate_model(model, induced=False)
    return model


def _deletion_keeps_valid(m: MinorModel, v: int, x: int) -> bool:
    """Would deleting host vertex x from branch set v keep the plain-model invariants?"""
    host, pat = m.host, m.pattern
    shrunk = m.branch_sets[v] - {x}
    if not shrunk:
        return False
    if not host.is_connected_set(shrunk):
        return False
    for u in pat.adjacency[v]:
        su = m.branch_sets[u]
        if not any(host.has_edge(a, b) for a in shrunk for b in su):
            return False
    return True


def minimize_minor_model(m: MinorModel) -> MinorModel:
    """Shrink branch sets until no single-vertex deletion preserves model validity.

    Scans pattern vertices in ascending order and host vertices in ascending
    order inside each branch set, restarting after every deletion, so the
    result is deterministic.
    """
    _require_valid(m, induced=False, who="minimize_minor_model")
    sets = {v: frozenset(s) for v, s in m.branch_sets.items()}
    current = MinorModel(pattern=m.pattern, host=m.host, branch_sets=sets)
    changed = True
    while changed:
        changed = False
        for v in sorted(current.branch_sets):
            for x in sorted(current.branch_sets[v]):
                if _deletion_keeps_valid(current, v, x):
                    sets = dict(current.branch_sets)
                    sets[v] = sets[v] - {x}
                    current = MinorModel(pattern=m.pattern, host=m.host, branch_sets=sets)
                    changed = True
                    break
            if changed:
                break
    return current


def shrink_connected_cover(g: Graph, attachments: frozenset[int] | set[int], component: frozenset[int] | set[int]) -> frozenset[int]:
    """Minimal connected subset of `component` whose neighborhood covers `attachments`.

    `component` must be a full connected component of g minus `attachments`,
    and every attachment vertex must have a neighbor inside it.  Deletes
    vertices greedily while connectivity and coverage survive; the result
    always induces a subgraph with clique number at most 3.
    """
    i_set = frozenset(attachments)
    c_set = frozenset(component)
    if len(i_set) > SHRINK_ATTACHMENT_CAP:
        raise ValueError(
            f"attachment set has {len(i_set)} vertices; the cover bound needs at most 3"
        )
    if not c_set:
        raise ValueError("component set is empty")
    if i_set & c_set:
        raise ValueError("attachment set and component overlap")
    bad = sorted(v for v in i_set | c_set if not 0 <= v < g.n)
    if bad:
        raise ValueError(f"vertices {bad} are out of range")
    if not g.is_connected_set(c_set):
        raise ValueError("component set does not induce a connected subgraph")
    outside = g.set_neighborhood(c_set) - i_set
    if outside:
        raise ValueError(
            f"component is not maximal in g minus attachments: also adjacent to {sorted(outside)}"
        )
    uncovered = sorted(v for v in i_set if not (g.adjacency[v] & c_set))
    if uncovered:
        raise ValueError(f"attachment vertices {uncovered} have no neighbor in the component")

    def covers(h: set[int]) -> bool:
        return all(g.adjacency[v] & h for v in i_set)

    h = set(c_set)
    changed = True
    while changed:
        changed = False
        for x in sorted(h):
            trial = h - {x}
            if trial and g.is_connected_set(trial) and covers(trial):
                h = trial
                changed = True
                break
    assert clique_number(g.induced_subgraph(h)) <= 3
    return frozenset(h)


def restrict_model(m: MinorModel, sub_pattern_vertices: set[int] | frozenset[int]) -> MinorModel:
    """Plain minor model of the pattern's induced subgraph on the given vertices.

    Branch sets are kept as-is; the sub-pattern is relabeled 0..|S|-1 in sorted
    order of the chosen vertices.
    """
    _require_valid(m, induced=isinstance(m, InducedMinorModel), who="restrict_model")
    chosen = sorted(set(sub_pattern_vertices))
    bad = [v for v in chosen if not 0 <= v < m.pattern.n]
    if bad:
        raise ModelValidationError(f"sub-pattern vertices {bad} are not pattern vertices")
    sub_pattern = m.pattern.induced_subgraph(chosen)
    sets = {i: m.branch_sets[v] for i, v in enumerate(chosen)}
    out = MinorModel(pattern=sub_pattern, host=m.host, branch_sets=sets)
    problems = validate_model(out, induced=False)
    if problems:
        raise ModelValidationError(f"restriction produced an invalid model: {problems[0]}")
    return out


def compose_models(outer: MinorModel, inner: MinorModel) -> MinorModel:
    """Compose a model of A in B with a model of B in C into a model of A in C."""
    if outer.host != inner.pattern:
        raise ModelValidationError("outer host and inner pattern differ; models do not compose")
    _require_valid(outer, induced=False, who="compose_models")
    _require_valid(inner, induced=False, who="compose_models")
    sets: dict[int, frozenset[int]] = {}
    for v, s in outer.branch_sets.items():
        merged: set[int] = set()
        for p in s:
            merged |= inner.branch_sets[p]
        sets[v] = frozenset(merged)
    out = MinorModel(pattern=outer.pattern, host=inner.host, branch_sets=sets)
    problems = validate_model(out, induced=False)
    if problems:
        raise ModelValidationError(f"composition produced an invalid model: {problems[0]}")
    return out


def lsg_canonical_model(g: Graph) -> InducedMinorModel:
    """Canonical induced minor model of g in the line graph of its full subdivision.

    The host vertex for the i-th subdivision edge in sorted order is i; the
    branch set of an original vertex v collects the host vertices for the
    subdivision edges incident to v (its "half-edges"), which form a clique.
    """
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    if isolated:
        raise ValueError(
            f"vertices {isolated} are isolated and would get empty branch sets"
        )
    s = subdivide_once(g)
    host, edge_order = line_graph(s)
    sets: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for idx, (a, b) in enumerate(edge_order):
        # Each subdivision edge joins one original vertex and one midpoint.
        orig = a if a < g.n else b
        sets[orig].add(idx)
    model = InducedMinorModel(
        pattern=g, host=host, branch_sets={v: frozenset(s_) for v, s_ in sets.items()}
    )
    problems = validate_model(model, induced=True)
    if problems:
        raise AssertionError(f"canonical construction failed validation: {problems}")
    return model


def subdivision_model(g: Graph) -> InducedMinorModel:
    """Induced minor model of g in its full subdivision.

    The branch set of v is v itself plus the midpoints of incident edges whose
    smaller endpoint is v, so midpoints are claimed exactly once.
    """
    s = subdivide_once(g)
    sorted_edges = sorted(g.edges)
    sets: dict[int, set[int]] = {v: {v} for v in range(g.n)}
    for i, (u, _v) in enumerate(sorted_edges):
        sets[u].add(g.n + i)
    model = InducedMinorModel(
        pattern=g, host=s, branch_sets={v: frozenset(s_) for v, s_ in sets.items()}
    )
    problems = validate_model(model, induced=True)
    if problems:
        raise AssertionError(f"subdivision model failed validation: {problems}")
    return model


def model_to_text(m: MinorModel) -> str:
    """Serialize a model: graph6 host and pattern header, then one line per branch set."""
    from .io import graph6_encode

    lines = [f"host {graph6_encode(m.host)}", f"pattern {graph6_encode(m.pattern)}"]
    for v in sorted(m.branch_sets):
        members = " ".join(str(x) for x in sorted(m.branch_sets[v]))
        lines.append(f"{v}: {members}".rstrip())
    return "\n".join(lines) + "\n"


def model_from_text(text: str) -> MinorModel:
    from .errors import FormatError
    from .io import graph6_decode

    host: Graph | None = None
    pattern: Graph | None = None
    sets: dict[int, frozenset[int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("host "):
            host = graph6_decode(line[5:])
        elif line.startswith("pattern "):
            pattern = graph6_decode(line[8:])
        else:
            head, _, tail = line.partition(":")
            try:
                v = int(head.strip())
            except ValueError as exc:
                raise FormatError(f"malformed branch-set line {line!r}") from exc
            try:
                members = frozenset(int(x) for x in tail.split())
            except ValueError as exc:
                raise FormatError(f"malformed branch-set line {line!r}") from exc
            if v in sets:
                raise FormatError(f"duplicate branch set for pattern vertex {v}")
            sets[v] = members
    if host is None or pattern is None:
        raise FormatError("model text needs 'host' and 'pattern' header lines")
    return MinorModel(pattern=pattern, host=host, branch_sets=sets)
