"""Integer polynomials and empirical treewidth-versus-clique profiles.

All arithmetic is exact: coefficients are Python integers, so composition can
grow them without overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ResourceLimitError
from .graphs import Graph, clique_number
from .treewidth import exact_treewidth

PROFILE_VERTEX_CAP = 12


@dataclass(frozen=True)
class Polynomial:
    """Univariate integer polynomial; coefficients[i] multiplies x**i."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, *coefficients: int) -> "Polynomial":
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial((other,))
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return Polynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))
        )

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial((other,))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(tuple(out))

    def stretch(self, factor: int) -> "Polynomial":
        """Substitute factor*x for x."""
        return Polynomial(tuple(c * factor**i for i, c in enumerate(self.coefficients)))

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)), computed exactly by Horner over polynomials."""
        result = Polynomial(())
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(reversed(parts)) if parts else "0"


def nondecreasing_majorant(p: Polynomial) -> Polynomial:
    """Drop every term with a negative coefficient.

    The result r satisfies r(x) >= p(x) for all x >= 0 and is nondecreasing on
    the nonnegative integers.  A negative constant term is dropped too.
    """
    kept = tuple(
        c if (c > 0 or (i == 0 and c >= 0)) else 0 for i, c in enumerate(p.coefficients)
    )
    return Polynomial(kept)


def compose_h(f: Polynomial, g: Polynomial) -> Polynomial:
    """The bound transfer composition: x -> g(f(3x) + 1), exactly.

    f should be nondecreasing on the nonnegative integers; apply
    nondecreasing_majorant first when it is not.
    """
    return g.compose(f.stretch(3) + 1)


@dataclass(frozen=True)
class BindingProfile:
    """Observed (clique number, treewidth) pairs over all induced subgraphs."""

    points: frozenset[tuple[int, int]]

    @cached_property
    def envelope(self) -> dict[int, int]:
        """Max observed treewidth per observed clique number."""
        out: dict[int, int] = {}
        for omega, tw in sorted(self.points):
            if omega not in out or tw > out[omega]:
                out[omega] = tw
        return out


def empirical_binding_profile(g: Graph) -> BindingProfile:
    """Exact (clique, treewidth) pairs over all 2**n induced subgraphs of g."""
    if g.n > PROFILE_VERTEX_CAP:
        raise ResourceLimitError(
            f"profile enumeration caps at {PROFILE_VERTEX_CAP} vertices; got {g.n}"
        )
    points: set[tuple[int, int]] = set()
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        sub = g.induced_subgraph(vs)
        omega = clique_number(sub)
        width, _ = exact_treewidth(sub)
        points.add((omega, width))
    return BindingProfile(frozenset(points))


def check_profile_bounded(profile: BindingProfile, f: Polynomial) -> list[tuple[int, int]]:
    """Every observed (clique, treewidth) pair with treewidth exceeding f(clique)."""
    return sorted((omega, tw) for omega, tw in profile.points if tw > f(omega))


def profile_to_csv(profile: BindingProfile) -> str:
    lines = ["omega,treewidth"]
    for omega in sorted(profile.envelope):
        lines.append(f"{omega},{profile.envelope[omega]}")
    return "\n".join(lines) + "\n"


def parse_coefficients(text: str) -> Polynomial:
    """Parse 'a0,a1,a2' or 'a0 a1 a2' into a polynomial."""
    raw = text.replace(",", " ").split()
    if not raw:
        return Polynomial(())
    try:
        return Polynomial(tuple(int(x) for x in raw))
    except ValueError as exc:
        raise ValueError(f"polynomial coefficients must be integers, got {text!r}") from exc


def format_coefficients(p: Polynomial) -> str:
    if not p.coefficients:
        return "0"
    return ",".join(str(c) for c in p.coefficients)
