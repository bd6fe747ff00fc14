"""Interchange formats: graph6 (McKay), hypergraph text files, DOT export."""

from __future__ import annotations

from pathlib import Path

from .errors import PreconditionError
from .graph import Graph, Hypergraph

G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise PreconditionError("n < 2**36", "graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    s = out.decode("ascii")
    return G6_HEADER + s if header else s


def from_graph6(text: str | bytes) -> Graph:
    """Decode a single graph6 string; an optional ``>>graph6<<`` header is accepted."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if not s:
        raise PreconditionError("well-formed graph6", "empty string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise PreconditionError("well-formed graph6", f"illegal character in {s!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise PreconditionError("well-formed graph6", "truncated size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise PreconditionError("well-formed graph6", "truncated size field")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise PreconditionError(
            "well-formed graph6", f"expected {need} data bytes for n={n}, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    total = n * (n - 1) // 2
    bits = []
    for x in body:
        for s in range(5, -1, -1):
            bits.append((x >> s) & 1)
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if any(bits[total:]):
        raise PreconditionError("well-formed graph6", "non-zero padding bits")
    return Graph._trusted(n, adj)


def read_graph_arg(arg: str) -> Graph:
    """Parse a graph6 string, or ``@path`` naming a file whose first line is graph6."""
    if arg.startswith("@"):
        line = Path(arg[1:]).read_text().splitlines()[0]
        return from_graph6(line)
    return from_graph6(arg)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines += [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``n m`` header plus ``m`` lines of 0-based vertex indices."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise PreconditionError("hypergraph header 'n m'", "missing or malformed first line")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [[int(x) for x in row] for row in rows[1:]]
    except ValueError as exc:
        raise PreconditionError("integer hypergraph entries", str(exc)) from None
    if len(edges) != m:
        raise PreconditionError("hyperedge count matches header", f"header says {m}, found {len(edges)}")
    return Hypergraph(n, edges)
