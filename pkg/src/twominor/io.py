"""Graph interchange formats: graph6, plain edge lists, and DOT export.

graph6 follows the published ASCII encoding bit for bit: the vertex count is
encoded as N(n), then the upper triangle of the adjacency matrix is read in
column order x(0,1), x(0,2), x(1,2), x(0,3), ... and packed into 6-bit groups,
each offset by 63.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import Graph

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise FormatError("vertex count must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes(
            [126, 126]
            + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)]
        )
    raise FormatError(f"vertex count {n} exceeds the graph6 limit")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise FormatError("truncated graph6 size field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def graph6_encode(g: Graph) -> str:
    out = bytearray(_encode_size(g.n))
    bits: list[int] = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise FormatError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("graph6 strings are ASCII only") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b} out of graph6 range 63..126")
    n, used = _decode_size(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise FormatError(
            f"graph6 body has {len(body)} bytes, expected {expected} for {n} vertices"
        )
    bits: list[int] = []
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits in graph6 body")
    edges = set()
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.add((i, j))
            idx += 1
    return Graph(n, frozenset(edges))


def edgelist_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"first line must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise FormatError(f"negative counts in header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges but {len(lines) - 1} lines follow")
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"non-integer edge line {ln!r}") from exc
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for {n} vertices")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise FormatError(f"duplicate edge ({e[0]}, {e[1]})")
        edges.add(e)
    return Graph(n, frozenset(edges))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decode_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return graph6_decode(text)
    if fmt == "edgelist":
        return edgelist_decode(text)
    raise FormatError(f"unknown graph format {fmt!r}")


def encode_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return graph6_encode(g) + "\n"
    if fmt == "edgelist":
        return edgelist_encode(g)
    raise FormatError(f"unknown graph format {fmt!r}")
