"""Builders for the graph families used as extremal constructions and hosts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_form
from .errors import PreconditionError
from .gf import field, is_prime_power
from .graph import Graph, cycle_graph


def turan_graph(n: int, k: int) -> Graph:
    """T_{k-1}(n): complete (k-1)-partite graph on n vertices with balanced classes.

    Classes are contiguous vertex ranges, larger classes first.
    """
    if k < 2:
        raise PreconditionError("k >= 2", f"turan_graph needs k >= 2, got {k}")
    if n < 0:
        raise PreconditionError("n >= 0", f"got n={n}")
    return complete_multipartite(turan_class_sizes(n, k - 1))


def turan_class_sizes(n: int, parts: int) -> list[int]:
    base, extra = divmod(n, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def complete_multipartite(sizes) -> Graph:
    cls = []
    for i, s in enumerate(sizes):
        cls += [i] * s
    n = len(cls)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if cls[u] != cls[v]])


def blowup(g: Graph, sizes) -> Graph:
    """Replace vertex v by an independent set of ``sizes[v]`` vertices."""
    sizes = list(sizes)
    if len(sizes) != g.n:
        raise PreconditionError("len(sizes) == |V(G)|", f"{len(sizes)} sizes for {g.n} vertices")
    if any(s < 1 for s in sizes):
        raise PreconditionError("positive sizes", f"sizes {sizes}")
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = [(x, y) for u, v in g.edges() for x in blocks[u] for y in blocks[v]]
    return Graph.from_edges(start, edges)


def furedi_graph(q: int, t: int) -> Graph:
    """Füredi's K_{2,t}-free graph F_{q,t} on (q^2-1)/(t-1) vertices.

    Vertices are the orbits of GF(q)^2 minus the origin under scaling by the
    subgroup S of GF(q)* of order t-1; <(a,b)> ~ <(x,y)> iff ax+by lies in S.
    Loops are dropped.  Orbits are numbered in order of their least member.
    """
    if not is_prime_power(q):
        raise PreconditionError("q a prime power", f"{q} is not a prime power")
    if t < 2:
        raise PreconditionError("t >= 2", f"got t={t}")
    if (q - 1) % (t - 1):
        raise PreconditionError("(t-1) divides (q-1)", f"t-1={t - 1} does not divide q-1={q - 1}")
    F = field(q)
    S = F.subgroup(t - 1)
    mul, add = F.mul_table, F.add_table
    orbit_of: dict[tuple[int, int], int] = {}
    reps: list[tuple[int, int]] = []
    for a in range(q):
        for b in range(q):
            if (a, b) == (0, 0) or (a, b) in orbit_of:
                continue
            for s in S:
                orbit_of[(mul[s][a], mul[s][b])] = len(reps)
            reps.append((a, b))
    n = len(reps)
    adj = [0] * n
    for i, (a, b) in enumerate(reps):
        for x in range(q):
            ax = mul[a][x]
            for y in range(q):
                if (x, y) == (0, 0):
                    continue
                if add[ax][mul[b][y]] in S:
                    j = orbit_of[(x, y)]
                    if j != i:
                        adj[i] |= 1 << j
    return Graph(n, adj)


def c_star(k: int, r: int) -> Graph:
    """C_k^{*r}: cycle 0..k-1 with r pendant vertices k..k+r-1 on vertex 0."""
    if k < 3 or r < 0:
        raise PreconditionError("k >= 3, r >= 0", f"got k={k}, r={r}")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(0, k + j) for j in range(r)]
    return Graph.from_edges(k + r, edges)


def c_double_star(k: int, r: int) -> Graph:
    """C_k^{**r} for k in {4,5}: r pendants on cycle vertex 0 and r on vertex 2."""
    if k not in (4, 5):
        raise PreconditionError("k in {4,5}", f"c_double_star is defined only for k=4,5, got {k}")
    if r < 0:
        raise PreconditionError("r >= 0", f"got r={r}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(0, k + j) for j in range(r)] + [(2, k + r + j) for j in range(r)]
    return Graph.from_edges(k + 2 * r, edges)


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def path(self, u: int, v: int, length: int) -> None:
        """Add a u-v path with ``length`` edges (length >= 1) through fresh vertices."""
        prev = u
        for _ in range(length - 1):
            w = self.vertex()
            self.edges.append((prev, w))
            prev = w
        self.edges.append((prev, v))

    def banana(self, u: int, v: int, t: int, r: int) -> None:
        for _ in range(r):
            self.path(u, v, t)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def banana(t: int, r: int) -> Graph:
    """B_t^r: r internally disjoint paths of length t between main vertices 0 and 1."""
    if t < 2:
        raise PreconditionError("t >= 2", f"banana paths need length >= 2, got {t}")
    if r < 1:
        raise PreconditionError("r >= 1", f"got r={r}")
    b = _Builder()
    u, v = b.vertex(), b.vertex()
    b.banana(u, v, t, r)
    return b.graph()


def q_graph(k: int, r: int, t: int) -> Graph:
    """Q_k^r(t): banana B_t^r on main vertices 0, 1 plus a 0-1 main path of length k-t."""
    if not (2 <= t < k) or r < 1:
        raise PreconditionError("2 <= t < k, r >= 1", f"got k={k}, r={r}, t={t}")
    b = _Builder()
    u, v = b.vertex(), b.vertex()
    b.banana(u, v, t, r)
    b.path(u, v, k - t)
    return b.graph()


def r_graph(k: int, r: int, a: int, b: int, c: int, d: int) -> Graph:
    """R_k^r(a,b,c,d): bananas B_a^r (u,v) and B_c^r (u',v') closed into a k-cycle.

    The connecting paths are v-u' of length b and v'-u of length d; a zero
    length identifies the two endpoints.  Vertex 0 is u and vertex 1 is v.
    """
    if a < 2 or c < 2 or b < 0 or d < 0 or r < 1 or a + b + c + d != k:
        raise PreconditionError(
            "a,c >= 2; b,d >= 0; a+b+c+d = k; r >= 1", f"got k={k}, r={r}, (a,b,c,d)=({a},{b},{c},{d})"
        )
    bl = _Builder()
    u, v = bl.vertex(), bl.vertex()
    u2 = v if b == 0 else bl.vertex()
    v2 = u if d == 0 else bl.vertex()
    bl.banana(u, v, a, r)
    bl.banana(u2, v2, c, r)
    if b:
        bl.path(v, u2, b)
    if d:
        bl.path(v2, u, d)
    return bl.graph()


def r_graph_vertex_count(r: int, a: int, b: int, c: int, d: int) -> int:
    return 4 - (b == 0) - (d == 0) + (a - 1) * r + (c - 1) * r + max(b - 1, 0) + max(d - 1, 0)


def r_graph_parameters(k: int) -> list[tuple[int, int, int, int]]:
    """Every (a,b,c,d) with a,c >= 2, b,d >= 0 and a+b+c+d = k, lexicographically."""
    out = []
    for a in range(2, k - 1):
        for b in range(0, k - a - 1):
            for c in range(2, k - a - b + 1):
                out.append((a, b, c, k - a - b - c))
    return out


def all_r_graphs(k: int, r: int, with_params: bool = False):
    """One R_k^r-graph per isomorphism class, over all permissible (a,b,c,d).

    The representative kept for a class is the one with the lexicographically
    least parameter tuple.  With ``with_params`` the result is a list of
    ``((a,b,c,d), graph)`` pairs.
    """
    if k < 5:
        raise PreconditionError("k >= 5", f"all_r_graphs needs k >= 5, got {k}")
    if r < 1:
        raise PreconditionError("r >= 1", f"got r={r}")
    return list(_all_r_graphs(k, r)) if with_params else [g for _, g in _all_r_graphs(k, r)]


_R_CACHE: dict[tuple[int, int], tuple] = {}


def _all_r_graphs(k, r):
    key = (k, r)
    if key not in _R_CACHE:
        seen = set()
        out = []
        for params in r_graph_parameters(k):
            a, b, c, d = params
            # swapping the two bananas, or the ends of both, gives an isomorphic graph
            if min((c, b, a, d), (a, d, c, b), (c, d, a, b)) < params:
                continue
            g = r_graph(k, r, *params)
            label = canonical_form(g)
            if label not in seen:
                seen.add(label)
                out.append((params, g))
        _R_CACHE[key] = tuple(out)
    return _R_CACHE[key]


FAMILY_KINDS = ("turan", "blowup", "furedi", "c_star", "c_double_star", "banana", "q_graph", "r_graph", "cycle")


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its integer parameters.

    ``blowup`` additionally takes the base graph; its parameters are the
    part sizes.
    """

    kind: str
    parameters: tuple[int, ...]
    base: Graph | None = None

    def build(self) -> Graph:
        p = self.parameters
        builders = {
            "turan": turan_graph,
            "furedi": furedi_graph,
            "c_star": c_star,
            "c_double_star": c_double_star,
            "banana": banana,
            "q_graph": q_graph,
            "r_graph": r_graph,
            "cycle": cycle_graph,
        }
        if self.kind == "blowup":
            if self.base is None:
                raise PreconditionError("blowup needs a base graph")
            return blowup(self.base, p)
        if self.kind not in builders:
            raise PreconditionError("known family kind", f"unknown kind {self.kind!r}")
        try:
            return builders[self.kind](*p)
        except TypeError:
            raise PreconditionError("parameter count", f"wrong number of parameters for {self.kind}: {p}") from None
