"""Exact and heuristic values of ex(n, H, {F_i}) and the general-purpose bounds.

Exact values come from isomorph-free generation of every n-vertex graph that
avoids the forbidden family.  Graphs are grown one vertex at a time, the new
vertex always being a minimum-degree vertex of the child; because avoiding a
subgraph is hereditary, every class at level n arises from some class at
level n-1, and duplicates are merged by canonical form.
"""

from __future__ import annotations

import csv
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from pathlib import Path

from .canon import canonical_labeling
from .core import count_copies, creates_copy_at_edge, creates_copy_at_vertex, is_free, is_free_of_all
from .embed import find_embedding
from .errors import LimitExceededError, PreconditionError
from .graph import Graph, complete_graph, empty_graph
from .io import from_graph6, to_graph6

EXACT = "exact"
HEURISTIC = "heuristic-lower"
RANDOM = "random-lower"
CERTIFIED_UPPER = "certified-upper"

DEFAULT_LIMIT = 10


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    pattern: Graph
    forbidden: tuple[Graph, ...]
    value: int
    witness: Graph
    method: str
    seed: int | None = None
    wall_time: float = field(default=0.0, compare=False)

    def ledger_row(self) -> list[str]:
        return [
            str(self.n),
            to_graph6(self.pattern),
            ";".join(to_graph6(f) for f in self.forbidden),
            str(self.value),
            self.method,
            to_graph6(self.witness),
            "" if self.seed is None else str(self.seed),
            f"{self.wall_time:.3f}",
        ]


LEDGER_HEADER = ["n", "H_g6", "F_g6", "value", "method", "witness_g6", "seed", "wall_time"]


def append_ledger(path, record: ExtremalRecord) -> None:
    """Append one record to a CSV ledger, writing the header for a new file."""
    path = Path(path)
    new = not path.exists() or path.stat().st_size == 0
    with path.open("a", newline="") as fh:
        w = csv.writer(fh)
        if new:
            w.writerow(LEDGER_HEADER)
        w.writerow(record.ledger_row())


# ---------------------------------------------------------------------------
# isomorph-free generation


def _canonical(g: Graph) -> tuple[str, Graph]:
    perm, _ = canonical_labeling(g)
    cg = g.relabel(perm)
    return to_graph6(cg), cg


def _children(parent: Graph, forbidden) -> dict[str, Graph]:
    """Canonical children of ``parent`` obtained by adding a minimum-degree vertex."""
    m = parent.n
    deg = parent.degrees()
    out: dict[str, Graph] = {}
    for d in range(m + 1):
        # every vertex outside S needs degree >= d, every vertex in S degree >= d-1
        if any(x < d - 1 for x in deg):
            break
        low = [v for v in range(m) if deg[v] < d]
        if len(low) > d:
            continue
        rest = [v for v in range(m) if deg[v] >= d]
        for extra in combinations(rest, d - len(low)):
            nbrs = 0
            for v in low:
                nbrs |= 1 << v
            for v in extra:
                nbrs |= 1 << v
            child = parent.add_vertex(nbrs)
            if any(creates_copy_at_vertex(child, f, m) for f in forbidden):
                continue
            label, cg = _canonical(child)
            if label not in out:
                out[label] = cg
    return out


def _expand_chunk(args):
    parents_g6, forbidden_g6 = args
    forbidden = [from_graph6(s) for s in forbidden_g6]
    out = {}
    for s in parents_g6:
        for label in _children(from_graph6(s), forbidden):
            out[label] = True
    return list(out)


_LEVEL_CACHE: dict[tuple, list[list[Graph]]] = {}


def _forbidden_key(forbidden) -> tuple[str, ...]:
    return tuple(sorted({_canonical(f)[0] for f in forbidden}))


def free_graph_classes(n: int, forbidden, workers: int = 1) -> list[Graph]:
    """All isomorphism classes of n-vertex graphs containing no member of ``forbidden``.

    Representatives are canonically labelled and sorted by graph6 label.
    """
    forbidden = list(forbidden)
    key = _forbidden_key(forbidden)
    levels = _LEVEL_CACHE.setdefault(key, [])
    if not levels:
        base = [empty_graph(0)]
        levels.append(base)
    while len(levels) <= n:
        parents = levels[-1]
        merged: dict[str, Graph] = {}
        if workers > 1 and len(parents) > 4 * workers:
            chunks = [parents[i::workers] for i in range(workers)]
            jobs = [([to_graph6(p) for p in ch], list(key)) for ch in chunks]
            with ProcessPoolExecutor(max_workers=workers) as ex:
                for labels in ex.map(_expand_chunk, jobs):
                    for label in labels:
                        merged[label] = None
            merged = {label: from_graph6(label) for label in merged}
        else:
            for p in parents:
                merged.update(_children(p, forbidden))
        levels.append([merged[label] for label in sorted(merged)])
    return levels[n]


def _check_forbidden(forbidden):
    for f in forbidden:
        if f.n <= 1:
            raise PreconditionError("no forbidden graph is a single vertex", f"forbidden graph with {f.n} vertices")


def exact_extremal(n: int, h: Graph, forbidden, limit: int = DEFAULT_LIMIT, workers: int = 1) -> ExtremalRecord:
    """Exact ex(n, H, forbidden) with a witness.

    Ties between witnesses are broken by the least canonical graph6 label.
    """
    forbidden = tuple(forbidden)
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the exhaustion limit {limit}")
    if n < 0:
        raise PreconditionError("n >= 0", f"got n={n}")
    _check_forbidden(forbidden)
    t0 = time.perf_counter()
    if not forbidden:
        kn = complete_graph(n)
        return ExtremalRecord(n, h, forbidden, complete_count(n, h), kn, EXACT, None, time.perf_counter() - t0)
    best_value = -1
    best = None
    for g in free_graph_classes(n, forbidden, workers):
        value = count_copies(h, g).value if h.n <= n else 0
        if value > best_value:
            best_value, best = value, g
    return ExtremalRecord(n, h, forbidden, best_value, best, EXACT, None, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# heuristic and randomised lower bounds


def _random_free_graph(n: int, forbidden, rng: random.Random) -> Graph:
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    g = empty_graph(n)
    for u, v in pairs:
        if rng.random() < 0.5:
            cand = g.add_edge(u, v)
            if not any(creates_copy_at_edge(cand, f, u, v) for f in forbidden):
                g = cand
    return g


def _saturate(g: Graph, forbidden) -> Graph:
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            cand = g.add_edge(u, v)
            if not any(creates_copy_at_edge(cand, f, u, v) for f in forbidden):
                g = cand
    return g


def heuristic_lower(
    n: int, h: Graph, forbidden, seed: int = 0, iterations: int = 2000, restarts: int = 4
) -> ExtremalRecord:
    """Hill climbing over forbidden-free graphs, maximising the number of copies of H.

    Moves add an edge or swap one edge for a non-edge; a move is kept when the
    graph stays free and the count does not drop.  Each restart starts from a
    random free graph drawn with its own child seed.
    """
    forbidden = tuple(forbidden)
    _check_forbidden(forbidden)
    t0 = time.perf_counter()
    master = random.Random(seed)
    best = None
    best_value = -1
    pairs = list(combinations(range(n), 2))

    def score(g):
        return count_copies(h, g).value if h.n <= n else 0

    for _ in range(restarts):
        rng = random.Random(master.getrandbits(64))
        g = _random_free_graph(n, forbidden, rng)
        cur = score(g)
        for _ in range(iterations):
            if not pairs:
                break
            u, v = rng.choice(pairs)
            if g.has_edge(u, v):
                continue
            cand = g.add_edge(u, v)
            if rng.random() < 0.5:
                edges = g.edges()
                if not edges:
                    continue
                x, y = rng.choice(edges)
                cand = cand.remove_edge(x, y)
            if any(creates_copy_at_edge(cand, f, u, v) for f in forbidden):
                continue
            value = score(cand)
            if value >= cur:
                g, cur = cand, value
        g = _saturate(g, forbidden)
        cur = score(g)
        if cur > best_value or (cur == best_value and _canonical(g)[0] < _canonical(best)[0]):
            best, best_value = g, cur
    return ExtremalRecord(n, h, forbidden, best_value, best, HEURISTIC, seed, time.perf_counter() - t0)


def first_moment_coefficient(h: Graph, f: Graph) -> int:
    """|H|^{|H|(e(F)-e(H))} + 1, the coefficient used in the first-moment argument."""
    return h.n ** (h.n * (f.edge_count - h.edge_count)) + 1


@dataclass(frozen=True)
class RandomConstructionParams:
    """Inputs for the delete-one-edge-per-copy construction.

    The edge probability is c * n^{-(|F|-2)/(e(F)-e(H))}, clamped to [0, 1].
    """

    n: int
    H: Graph
    F: Graph
    c: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.F.edge_count <= self.H.edge_count:
            raise PreconditionError(
                "e(F) > e(H)", f"inapplicable proposition: e(F)={self.F.edge_count}, e(H)={self.H.edge_count}"
            )
        if self.c <= 0:
            raise PreconditionError("c > 0", f"got c={self.c}")

    @property
    def p(self) -> float:
        expo = (self.F.n - 2) / (self.F.edge_count - self.H.edge_count)
        return min(1.0, max(0.0, self.c * self.n ** (-expo))) if self.n > 0 else 0.0


def sample_gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_deletion_lower(params: RandomConstructionParams) -> ExtremalRecord:
    """Sample G(n,p), then repeatedly delete the least edge of some copy of F until none remain."""
    t0 = time.perf_counter()
    rng = random.Random(params.seed)
    g = sample_gnp(params.n, params.p, rng)
    f = params.F
    f_edges = f.edges()
    while True:
        emb = find_embedding(f, g)
        if emb is None:
            break
        copy_edges = [tuple(sorted((emb[a], emb[b]))) for a, b in f_edges]
        g = g.remove_edge(*min(copy_edges))
    value = count_copies(params.H, g).value if params.H.n <= g.n else 0
    return ExtremalRecord(params.n, params.H, (f,), value, g, RANDOM, params.seed, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# closed-form bounds


def exponent_lower(h: Graph, f: Graph) -> Fraction:
    """|H| - e(H)(|F|-2)/(e(F)-e(H)); negative values are returned unchanged."""
    eh, ef = h.edge_count, f.edge_count
    if ef <= eh:
        raise PreconditionError("e(F) > e(H)", f"e(F)={ef}, e(H)={eh}")
    return h.n - Fraction(eh * (f.n - 2), ef - eh)


def subtraction_bound(ex_f: int, ex_h: int) -> int:
    """ex(n,H,F) >= ex(n,F) - ex(n,H), clamped at zero."""
    return max(ex_f - ex_h, 0)


def real_binom(x: float, k: int) -> float:
    """x(x-1)...(x-k+1)/k! for real x."""
    out = 1.0
    for i in range(k):
        out *= x - i
    return out / factorial(k)


KK_TOLERANCE = 1e-9


def kk_solve(m: int, k: int) -> float:
    """The unique x >= k with binom(x, k) = m.

    Integer roots are returned exactly; otherwise bisection until the residual
    is within 1e-9 * max(1, m).
    """
    if m < 1 or k < 1:
        raise PreconditionError("m >= 1, k >= 1", f"got m={m}, k={k}")
    j = k
    while comb(j + 1, k) <= m:
        j += 1
    if comb(j, k) == m:
        return j
    lo, hi = float(j), float(j + 1)
    tol = KK_TOLERANCE * max(1, m)
    for _ in range(200):
        mid = (lo + hi) / 2
        val = real_binom(mid, k)
        if abs(val - m) <= tol * 1e-3:
            return mid
        if val < m:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    return (lo + hi) / 2


@dataclass(frozen=True)
class ShadowBound:
    m: int
    k: int
    i: int
    x: float
    value: float


def kk_shadow_bound(m: int, k: int, i: int):
    """Lower bound binom(x, i) on the i-shadow of any k-uniform family of m sets."""
    if not 1 <= i <= k:
        raise PreconditionError("1 <= i <= k", f"got i={i}, k={k}")
    x = kk_solve(m, k)
    if isinstance(x, int):
        return comb(x, i)
    return real_binom(x, i)


def shadow_bound(m: int, k: int, i: int) -> ShadowBound:
    return ShadowBound(m, k, i, kk_solve(m, k), kk_shadow_bound(m, k, i))


def kk_clique_bound(ex_f: int, t: int) -> Fraction:
    """ex(n,K_t,F) <= ex(n,F)^{t/2}; exact when the power is rational."""
    if ex_f < 0 or t < 2:
        raise PreconditionError("ex_F >= 0, t >= 2", f"got ex_F={ex_f}, t={t}")
    from .counting import _power

    return _power(Fraction(ex_f), t, 2)


def complete_count(n: int, h: Graph) -> int:
    """Copies of H in K_n, the answer when nothing is forbidden."""
    return count_copies(h, complete_graph(n)).value if h.n <= n else 0


__all__ = [
    "ExtremalRecord",
    "RandomConstructionParams",
    "ShadowBound",
    "append_ledger",
    "complete_count",
    "exact_extremal",
    "exponent_lower",
    "free_graph_classes",
    "heuristic_lower",
    "is_free",
    "is_free_of_all",
    "kk_clique_bound",
    "kk_shadow_bound",
    "kk_solve",
    "first_moment_coefficient",
    "random_deletion_lower",
    "shadow_bound",
    "subtraction_bound",
]
