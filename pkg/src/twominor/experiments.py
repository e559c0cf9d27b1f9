"""Seeded, reproducible verification suites and their report type.

Every suite derives one sub-seed per trial from (seed, trial index), so serial
and repeated runs produce byte-identical JSON reports; reports carry no
timestamps.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .errors import ModelValidationError, ResourceLimitError
from .graphs import (
    Graph,
    clique_number,
    complete_bipartite,
    is_claw_free,
    subdivide_once,
    wall,
)
from .io import graph6_decode, graph6_encode
from .minors import (
    InducedMinorModel,
    MinorModel,
    _deletion_keeps_valid,
    compose_models,
    find_minor_model,
    find_induced_minor_model,
    identity_model,
    lsg_canonical_model,
    minimize_minor_model,
    restrict_model,
    subdivision_model,
    validate_model,
)
from .treewidth import _wall_embedding, exact_treewidth

LEMMA4_HOST_CAP = 12
LEMMA4_PATTERN_CAP = 6
OBS7_TRIAL_CAP = 1000
NOISE_EDGE_PROBABILITY = 0.15

_MIX_A = 0x9E3779B97F4A7C15
_MIX_B = 0xBF58476D1CE4E5B9
_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """Stable 64-bit sub-seed for trial `index` of a run seeded with `seed`."""
    x = (seed * _MIX_A + index * _MIX_B + 1) & _MASK64
    x ^= x >> 31
    x = (x * _MIX_B) & _MASK64
    x ^= x >> 29
    return x


@dataclass
class ExperimentReport:
    experiment: str
    seed: int | None
    trials: int
    parameters: dict
    instances: list[dict] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "inconclusive": 0}
        for inst in self.instances:
            out[inst["status"]] += 1
        return out

    @property
    def verdict(self) -> str:
        counts = self.counts
        if counts["fail"]:
            return "fail"
        if counts["inconclusive"]:
            return "inconclusive"
        return "pass"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "experiment": self.experiment,
            "seed": self.seed,
            "trials": self.trials,
            "parameters": self.parameters,
            "instances": self.instances,
            "counts": self.counts,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        counts = self.counts
        return [
            f"{self.experiment}: instances={len(self.instances)} "
            f"pass={counts['pass']} fail={counts['fail']} "
            f"inconclusive={counts['inconclusive']} verdict={self.verdict}"
        ]


def _roundtrip_graph6(g: Graph) -> str:
    text = graph6_encode(g)
    if graph6_decode(text) != g:
        raise AssertionError("graph6 round trip changed the graph")
    return text


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = frozenset(
        (u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p
    )
    return Graph(n, edges)


def random_subcubic_graph(rng: random.Random, n: int, target_edges: int) -> Graph | None:
    """Grow a subcubic graph edge by edge; None when the target is unreachable."""
    edges: set[tuple[int, int]] = set()
    degree = [0] * n
    while len(edges) < target_edges:
        candidates = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if degree[u] < 3 and degree[v] < 3 and (u, v) not in edges
        ]
        if not candidates:
            return None
        u, v = candidates[rng.randrange(len(candidates))]
        edges.add((u, v))
        degree[u] += 1
        degree[v] += 1
    return Graph(n, frozenset(edges))


def _random_pattern(rng: random.Random, max_n: int, seed: int, trial: int) -> tuple[Graph, int]:
    """Random subcubic pattern, retrying degenerate draws with derived sub-seeds."""
    retries = 0
    local = rng
    while True:
        n = local.randint(1, max_n)
        cap = min(3 * n // 2, n * (n - 1) // 2)
        target = local.randint(0, cap)
        g = random_subcubic_graph(local, n, target)
        if g is not None:
            return g, retries
        retries += 1
        if retries > 100:
            raise RuntimeError("pattern generation failed 100 times in a row")
        local = random.Random(derive_seed(derive_seed(seed, trial), retries))


def _plant_pattern(rng: random.Random, pattern: Graph, host_cap: int) -> tuple[Graph, MinorModel]:
    """Random host guaranteed to contain the pattern: blobs, wiring, then noise."""
    k = pattern.n
    extra = rng.randint(0, min(3, host_cap - k))
    budget = host_cap - extra
    sizes = [1] * k
    pool = budget - k
    while pool > 0:
        growable = [i for i in range(k) if sizes[i] < 3]
        if not growable or rng.random() >= 0.7:
            break
        sizes[growable[rng.randrange(len(growable))]] += 1
        pool -= 1
    total = sum(sizes) + extra
    labels = list(range(total))
    rng.shuffle(labels)
    blobs: list[list[int]] = []
    idx = 0
    for size in sizes:
        blobs.append(sorted(labels[idx : idx + size]))
        idx += size

    edges: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    for members in blobs:
        for j in range(1, len(members)):
            add(members[j], members[rng.randrange(j)])
        if len(members) == 3 and rng.random() < 0.3:
            add(members[0], members[2])
    for u, v in sorted(pattern.edges):
        add(blobs[u][rng.randrange(len(blobs[u]))], blobs[v][rng.randrange(len(blobs[v]))])
    for a, b in itertools.combinations(range(total), 2):
        if (a, b) not in edges and rng.random() < NOISE_EDGE_PROBABILITY:
            edges.add((a, b))

    host = Graph(total, frozenset(edges))
    planted = MinorModel(
        pattern=pattern, host=host, branch_sets={i: frozenset(blobs[i]) for i in range(k)}
    )
    problems = validate_model(planted, induced=False)
    if problems:
        raise AssertionError(f"planting produced an invalid model: {problems}")
    return host, planted


def _is_minimal(m: MinorModel) -> bool:
    """Cross-check minimality by attempting every single-vertex deletion."""
    for v in sorted(m.branch_sets):
        for x in sorted(m.branch_sets[v]):
            if _deletion_keeps_valid(m, v, x):
                return False
    return True


def verify_lemma4(
    trials: int, seed: int, host_n: int = LEMMA4_HOST_CAP, pattern_n: int = LEMMA4_PATTERN_CAP
) -> ExperimentReport:
    """Random planted instances: minimized models must be minimal with branch cliques <= 3."""
    if host_n > LEMMA4_HOST_CAP:
        raise ResourceLimitError(f"lemma4 suite caps hosts at {LEMMA4_HOST_CAP} vertices")
    if pattern_n > LEMMA4_PATTERN_CAP:
        raise ResourceLimitError(f"lemma4 suite caps patterns at {LEMMA4_PATTERN_CAP} vertices")
    if pattern_n < 1 or host_n < pattern_n:
        raise ValueError("need 1 <= pattern_n <= host_n")

    report = ExperimentReport(
        experiment="lemma4",
        seed=seed,
        trials=trials,
        parameters={
            "host_n": host_n,
            "pattern_n": pattern_n,
            "noise_probability": NOISE_EDGE_PROBABILITY,
        },
    )
    for t in range(trials):
        sub = derive_seed(seed, t)
        rng = random.Random(sub)
        pattern, retries = _random_pattern(rng, pattern_n, seed, t)
        host, _planted = _plant_pattern(rng, pattern, host_n)
        record: dict = {
            "trial": t,
            "sub_seed": sub,
            "retries": retries,
            "pattern": _roundtrip_graph6(pattern),
            "host": _roundtrip_graph6(host),
        }
        found = find_minor_model(host, pattern)
        if found is None:
            record["status"] = "fail"
            record["reason"] = "planted pattern was not found by the search"
            report.instances.append(record)
            continue
        minimized = minimize_minor_model(found)
        branch_cliques = {
            v: clique_number(host.induced_subgraph(s))
            for v, s in minimized.branch_sets.items()
        }
        minimal = _is_minimal(minimized)
        record["branch_sets"] = {
            str(v): sorted(minimized.branch_sets[v]) for v in sorted(minimized.branch_sets)
        }
        record["max_branch_clique"] = max(branch_cliques.values())
        record["minimal"] = minimal
        record["status"] = (
            "pass" if minimal and record["max_branch_clique"] <= 3 else "fail"
        )
        report.instances.append(record)
    return report


def _model_as_record(m: MinorModel) -> dict:
    return {
        "pattern": graph6_encode(m.pattern),
        "host": graph6_encode(m.host),
        "branch_sets": {str(v): sorted(m.branch_sets[v]) for v in sorted(m.branch_sets)},
    }


def theorem5_pipeline(
    host: Graph,
    pattern: Graph,
    k: int,
    model: InducedMinorModel | None = None,
    instance_name: str = "instance",
) -> ExperimentReport:
    """Run the bound-transfer pipeline on one (host, pattern, k) instance.

    Steps: obtain an induced minor model of pattern in host; find a k-wall
    subdivision witness inside the pattern; restrict the model to the witness
    vertices and minimize the corresponding wall model; then check the four
    inequalities on the union of surviving branch sets.  A missing wall
    witness yields an inconclusive instance, not a failure.
    """
    if k < 1:
        raise ValueError("wall size must be at least 1")
    if model is None:
        if host == pattern:
            model = identity_model(host)
        else:
            model = find_induced_minor_model(host, pattern)
            if model is None:
                raise ValueError("pattern is not an induced minor of host; supply a model")
    else:
        problems = validate_model(model, induced=True)
        if problems:
            raise ModelValidationError(f"supplied model is invalid: {problems[0]}")
        if model.host != host or model.pattern != pattern:
            raise ModelValidationError("supplied model does not match host and pattern")

    report = ExperimentReport(
        experiment="theorem5",
        seed=None,
        trials=1,
        parameters={"k": k},
    )
    record: dict = {
        "instance": instance_name,
        "host": _roundtrip_graph6(host),
        "pattern": _roundtrip_graph6(pattern),
        "k": k,
        "induced_model": _model_as_record(model),
    }

    found = _wall_embedding(pattern, k)
    if found is None:
        record["status"] = "inconclusive"
        record["reason"] = f"no wall witness at k = {k}"
        report.instances.append(record)
        return report
    wall_model, witness_vertices, witness_edges = found

    order = sorted(witness_vertices)
    index = {v: i for i, v in enumerate(order)}
    witness_graph = Graph(
        len(order), frozenset((index[a], index[b]) for a, b in witness_edges)
    )

    restricted = restrict_model(model, witness_vertices)
    wall_in_host = compose_models(wall_model, model)
    minimized = minimize_minor_model(wall_in_host)

    union = sorted(minimized.branch_union())
    g_prime = host.induced_subgraph(union)
    branch_cliques = {
        v: clique_number(host.induced_subgraph(s)) for v, s in minimized.branch_sets.items()
    }
    omega_prime = clique_number(g_prime)
    omega_pattern = clique_number(pattern)
    tw_prime, _ = exact_treewidth(g_prime)
    tw_witness, _ = exact_treewidth(witness_graph)

    checks = {
        "branch_cliques_le_3": max(branch_cliques.values()) <= 3,
        "union_clique_le_3x_pattern": omega_prime <= 3 * omega_pattern,
        "union_treewidth_ge_k": tw_prime >= k,
        "witness_treewidth_ge_k": tw_witness >= k,
    }
    record.update(
        {
            "wall_witness": _model_as_record(wall_model),
            "witness_vertices": order,
            "restricted_model": _model_as_record(restricted),
            "minimized_wall_model": _model_as_record(minimized),
            "union_vertices": union,
            "g_prime": graph6_encode(g_prime),
            "max_branch_clique": max(branch_cliques.values()),
            "clique_g_prime": omega_prime,
            "clique_pattern": omega_pattern,
            "treewidth_g_prime": tw_prime,
            "treewidth_witness": tw_witness,
            "checks": checks,
            "status": "pass" if all(checks.values()) else "fail",
        }
    )
    report.instances.append(record)
    return report


def theorem5_standard_instances() -> dict[str, tuple[Graph, Graph, int, InducedMinorModel]]:
    """The three stock pipeline instances built around the 2-wall."""
    w2 = wall(2)
    lsg = lsg_canonical_model(w2)
    sub = subdivision_model(w2)
    return {
        "identity": (w2, w2, 2, identity_model(w2)),
        "lsg": (lsg.host, w2, 2, lsg),
        "subdivision": (sub.host, w2, 2, sub),
    }


def run_theorem5_suite(names: list[str] | None = None) -> ExperimentReport:
    """Run the stock instances and merge them into a single report."""
    stock = theorem5_standard_instances()
    chosen = names if names is not None else list(stock)
    unknown = [n for n in chosen if n not in stock]
    if unknown:
        raise ValueError(f"unknown theorem5 instances {unknown}; known: {sorted(stock)}")
    report = ExperimentReport(
        experiment="theorem5",
        seed=None,
        trials=len(chosen),
        parameters={"instances": chosen},
    )
    for name in chosen:
        host, pattern, k, model = stock[name]
        single = theorem5_pipeline(host, pattern, k, model=model, instance_name=name)
        report.instances.extend(single.instances)
    return report


def _greedy_triangle_free(g: Graph, order: list[int]) -> list[int]:
    chosen: list[int] = []
    chosen_set: set[int] = set()
    for v in order:
        inside = sorted(g.adjacency[v] & chosen_set)
        makes_triangle = any(
            g.has_edge(a, b) for a, b in itertools.combinations(inside, 2)
        )
        if not makes_triangle:
            chosen.append(v)
            chosen_set.add(v)
    return sorted(chosen)


def obs7_experiment(ell: int, trials: int, seed: int) -> ExperimentReport:
    """Structure checks on the line graph of the subdivided complete bipartite graph.

    Validates the canonical induced-minor model and claw-freeness, then checks
    that triangle-free induced subgraphs have maximum degree at most 2 and
    treewidth at most 2: exhaustively over all induced subgraphs for ell = 2,
    and over seeded random maximal triangle-free subgraphs for the trials.
    """
    if ell not in (2, 3):
        raise ValueError("ell must be 2 or 3")
    if trials < 0 or trials > OBS7_TRIAL_CAP:
        raise ResourceLimitError(f"obs7 suite caps trials at {OBS7_TRIAL_CAP}")

    pattern = complete_bipartite(ell, ell)
    model = lsg_canonical_model(pattern)
    host = model.host
    report = ExperimentReport(
        experiment="obs7",
        seed=seed,
        trials=trials,
        parameters={"ell": ell, "host": _roundtrip_graph6(host)},
    )

    model_problems = validate_model(model, induced=True)
    report.instances.append(
        {
            "check": "canonical_model_valid",
            "violations": model_problems,
            "status": "pass" if not model_problems else "fail",
        }
    )
    claw_free = is_claw_free(host)
    report.instances.append(
        {
            "check": "claw_free",
            "value": claw_free,
            "status": "pass" if claw_free else "fail",
        }
    )

    if ell == 2:
        violations = []
        triangle_free_count = 0
        for mask in range(1 << host.n):
            vs = [v for v in range(host.n) if mask >> v & 1]
            sub = host.induced_subgraph(vs)
            if clique_number(sub) >= 3:
                continue
            triangle_free_count += 1
            width, _ = exact_treewidth(sub)
            if width > 2:
                violations.append({"vertices": vs, "treewidth": width})
        report.instances.append(
            {
                "check": "exhaustive_triangle_free_treewidth",
                "subgraphs": 1 << host.n,
                "triangle_free": triangle_free_count,
                "violations": violations,
                "status": "pass" if not violations else "fail",
            }
        )

    for t in range(trials):
        rng = random.Random(derive_seed(seed, t))
        order = list(range(host.n))
        rng.shuffle(order)
        vs = _greedy_triangle_free(host, order)
        sub = host.induced_subgraph(vs)
        max_deg = sub.max_degree()
        width, _ = exact_treewidth(sub)
        ok = max_deg <= 2 and width <= 2
        report.instances.append(
            {
                "trial": t,
                "vertices": vs,
                "max_degree": max_deg,
                "treewidth": width,
                "status": "pass" if ok else "fail",
            }
        )
    return report
