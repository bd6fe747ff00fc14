"""Berge copies in hypergraphs, the clique/graph reductions, and exact Berge-Turán numbers.

A hypergraph contains a Berge copy of F when the vertices of F can be mapped
injectively into it and each edge of F can be assigned its own hyperedge
containing the images of its endpoints.  For a fixed vertex map the edge
assignment is a bipartite matching problem, which is solved incrementally
while the vertex map is being extended.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canon import hypergraph_canonical_form
from .core import clique_count, iter_cliques
from .embed import pattern_order
from .errors import GenTuranError, LimitExceededError, PreconditionError
from .graph import Graph, Hypergraph, complete_graph
from .io import to_graph6

CLIQUE = "clique"
DEFAULT_LIMIT = 6


class BergeC2:
    """The multigraph C_2: two parallel edges on two vertices.

    Its Berge copies are exactly pairs of hyperedges sharing at least two
    vertices, so it gets a dedicated predicate instead of a Graph.
    """

    n = 2
    label = "C2"

    def __eq__(self, other):
        return isinstance(other, BergeC2)

    def __hash__(self):
        return hash("BergeC2")

    def __repr__(self):
        return "BERGE_C2"

    def __reduce__(self):
        return (BergeC2, ())


BERGE_C2 = BergeC2()


def pattern_label(f) -> str:
    return BergeC2.label if isinstance(f, BergeC2) else to_graph6(f)


@dataclass(frozen=True)
class BergeWitness:
    """A Berge copy: core vertex map plus one distinct hyperedge per pattern edge."""

    core: dict
    assignment: tuple  # ((u, v), hyperedge) pairs, one per pattern edge

    def verify(self, h: Hypergraph, f) -> bool:
        images = list(self.core.values())
        if len(set(images)) != len(images):
            return False
        hedges = [e for _, e in self.assignment]
        if len(set(hedges)) != len(hedges) or any(e not in h.edges for e in hedges):
            return False
        pattern_edges = [(0, 1), (0, 1)] if isinstance(f, BergeC2) else list(f.edges())
        if sorted(e for e, _ in self.assignment) != sorted(pattern_edges):
            return False
        return all(self.core[u] in e and self.core[v] in e for (u, v), e in self.assignment)


def _c2_witness(h: Hypergraph) -> BergeWitness | None:
    masks = h.masks()
    for i, j in combinations(range(len(masks)), 2):
        common = masks[i] & masks[j]
        if common.bit_count() >= 2:
            a = (common & -common).bit_length() - 1
            rest = common & (common - 1)
            b = (rest & -rest).bit_length() - 1
            return BergeWitness({0: a, 1: b}, (((0, 1), h.edges[i]), ((0, 1), h.edges[j])))
    return None


def _augment(e, cover, edge_to, hedge_to, seen) -> bool:
    """Kuhn's augmenting path from pattern edge ``e``; mutates the matching."""
    free = cover[e] & ~seen[0]
    while free:
        low = free & -free
        x = low.bit_length() - 1
        free ^= low
        if seen[0] & low:
            continue
        seen[0] |= low
        owner = hedge_to.get(x)
        if owner is None or _augment(owner, cover, edge_to, hedge_to, seen):
            edge_to[e] = x
            hedge_to[x] = e
            return True
    return False


def contains_berge(h: Hypergraph, f) -> BergeWitness | None:
    """A Berge copy of ``f`` in ``h``, or None."""
    if isinstance(f, BergeC2):
        return _c2_witness(h)
    if f.edge_count < 1:
        raise PreconditionError("F has >= 1 edge", "Berge pattern without edges")
    if f.n > h.n or f.edge_count > len(h.edges):
        return None
    masks = h.masks()
    n = h.n
    pair_cover = {}
    shadow_adj = [0] * n
    for idx, m in enumerate(masks):
        for a, b in combinations([v for v in range(n) if m >> v & 1], 2):
            pair_cover[(a, b)] = pair_cover.get((a, b), 0) | (1 << idx)
            shadow_adj[a] |= 1 << b
            shadow_adj[b] |= 1 << a

    order = [v for v in pattern_order(f) if f.degree(v) > 0]
    isolated = [v for v in range(f.n) if f.degree(v) == 0]
    pos = {v: i for i, v in enumerate(order)}
    # pattern edges that become fully mapped when order[i] is placed
    new_edges = [[] for _ in order]
    edge_list = []
    for u, v in f.edges():
        later = u if pos[u] > pos[v] else v
        earlier = v if later == u else u
        new_edges[pos[later]].append(len(edge_list))
        edge_list.append((earlier, later))
    back = [[edge_list[e][0] for e in new_edges[i]] for i in range(len(order))]
    image = {}
    cover = {}

    def rec(i, used, edge_to, hedge_to):
        if i == len(order):
            return edge_to
        w = order[i]
        cand = ((1 << n) - 1) & ~used
        for p in back[i]:
            cand &= shadow_adj[image[p]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            image[w] = x
            for e in new_edges[i]:
                a = image[edge_list[e][0]]
                cover[e] = pair_cover[(min(a, x), max(a, x))]
            e2h, h2e = dict(edge_to), dict(hedge_to)
            if all(_augment(e, cover, e2h, h2e, [0]) for e in new_edges[i]):
                found = rec(i + 1, used | low, e2h, h2e)
                if found is not None:
                    return found
        image.pop(w, None)
        return None

    edge_to = rec(0, 0, {}, {})
    if edge_to is None:
        return None
    used = set(image.values())
    spare = [v for v in range(n) if v not in used]
    if len(spare) < len(isolated):
        return None
    core = dict(image)
    for v, x in zip(isolated, spare):
        core[v] = x
    assignment = tuple(
        ((min(edge_list[e]), max(edge_list[e])), h.edges[edge_to[e]]) for e in range(len(edge_list))
    )
    return BergeWitness(core, assignment)


def is_berge_free(h: Hypergraph, forbidden) -> bool:
    return all(contains_berge(h, f) is None for f in forbidden)


def cliques_to_hypergraph(g: Graph, mode="all") -> Hypergraph:
    """Hyperedges are the vertex sets of the K_r copies (``mode=r``) or of all cliques of size >= 2."""
    if mode == "all":
        edges = [c for t in range(2, g.n + 1) for c in iter_cliques(g, t)]
    else:
        r = int(mode)
        if r < 2:
            raise PreconditionError("r >= 2", f"uniform mode needs r >= 2, got {r}")
        edges = list(iter_cliques(g, r))
    return Hypergraph(g.n, edges)


def hypergraph_to_graph(h: Hypergraph) -> tuple[Graph, list]:
    """Greedy graph whose copies of F certify Berge copies of F in ``h``.

    Hyperedges are taken in (size, lexicographic) order; each claims its
    least pair not yet an edge, or is marked ``CLIQUE`` when every pair inside
    it is already present.  Returns the graph and the per-hyperedge claims.
    """
    adj = [0] * h.n
    assignment = []
    for e in h.edges:
        claim = CLIQUE
        for a, b in combinations(e, 2):
            if not adj[a] >> b & 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                claim = (a, b)
                break
        assignment.append(claim)
    return Graph(h.n, adj), assignment


def total_clique_count(g: Graph) -> int:
    """Number of cliques with at least two vertices."""
    return sum(clique_count(g, t) for t in range(2, g.n + 1))


# ---------------------------------------------------------------------------
# exhaustive Berge-Turán search


@dataclass(frozen=True)
class BergeExtremalRecord:
    n: int
    r: int
    forbidden: tuple
    value: int
    witness: Hypergraph
    method: str = "exact"
    wall_time: float = field(default=0.0, compare=False)

    def ledger_row(self) -> list[str]:
        return [
            str(self.n),
            f"berge-r{self.r}",
            ";".join(pattern_label(f) for f in self.forbidden),
            str(self.value),
            self.method,
            ";".join("-".join(map(str, e)) for e in self.witness.edges),
            "",
            f"{self.wall_time:.3f}",
        ]


def _expand(args):
    parents, n, r, forbidden = args
    out = {}
    triples = list(combinations(range(n), r))
    for parent in parents:
        present = set(parent.edges)
        for e in triples:
            if e in present:
                continue
            child = parent.add_edge(e)
            key = hypergraph_canonical_form(child)
            if key in out:
                continue
            if is_berge_free(child, forbidden):
                out[key] = child
    return out


def berge_free_levels(n: int, r: int, forbidden, workers: int = 1):
    """Yield, for m = 0, 1, ..., the Berge-free r-uniform classes with m hyperedges."""
    level = {hypergraph_canonical_form(Hypergraph(n)): Hypergraph(n)}
    while level:
        yield level
        parents = [level[k] for k in sorted(level)]
        if workers > 1 and len(parents) > 1:
            chunks = [(parents[i::workers], n, r, forbidden) for i in range(workers)]
            nxt = {}
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_expand, chunks):
                    for k, v in part.items():
                        nxt.setdefault(k, v)
            level = nxt
        else:
            level = _expand((parents, n, r, forbidden))


def exact_berge_extremal(n: int, r: int, forbidden, limit: int = DEFAULT_LIMIT, workers: int = 1) -> BergeExtremalRecord:
    """ex_r(n, Berge-{F_i}): the most hyperedges of an r-uniform Berge-free hypergraph.

    The witness is the class with the least canonical form at the top level.
    """
    if r < 2:
        raise PreconditionError("r >= 2", f"got r={r}")
    if n < 0:
        raise PreconditionError("n >= 0", f"got n={n}")
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the exhaustive Berge limit {limit}")
    forbidden = tuple(forbidden)
    for f in forbidden:
        if not isinstance(f, BergeC2) and f.edge_count < 1:
            raise PreconditionError("F has >= 1 edge", "Berge pattern without edges")
    t0 = time.perf_counter()
    top = None
    for level in berge_free_levels(n, r, forbidden, workers):
        top = level
    key = min(top)
    witness = top[key]
    return BergeExtremalRecord(n, r, forbidden, len(witness.edges), witness, "exact", time.perf_counter() - t0)


@dataclass(frozen=True)
class SandwichReport:
    """ex(n,K_r,F) <= ex_r(n,Berge-F) <= ex(n,K_r,F) + ex(n,F)."""

    n: int
    r: int
    pattern: Graph
    lower: int
    middle: int
    ex_f: int

    @property
    def upper(self) -> int:
        return self.lower + self.ex_f

    @property
    def lower_holds(self) -> bool:
        return self.lower <= self.middle

    @property
    def upper_holds(self) -> bool:
        return self.middle <= self.upper

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.lower, self.middle, self.upper)


def berge_sandwich_check(n: int, r: int, f: Graph, limit: int = DEFAULT_LIMIT, workers: int = 1) -> SandwichReport:
    """Compute the three sandwich quantities exactly; raises if either inequality fails."""
    from .extremal import exact_extremal

    if isinstance(f, BergeC2):
        raise PreconditionError("F a simple graph", "the sandwich needs a graph pattern")
    lower = exact_extremal(n, complete_graph(r), [f], workers=workers).value
    middle = exact_berge_extremal(n, r, [f], limit=limit, workers=workers).value
    ex_f = exact_extremal(n, complete_graph(2), [f], workers=workers).value
    report = SandwichReport(n, r, f, lower, middle, ex_f)
    if not report.holds:
        raise GenTuranError(f"sandwich violated: {report.as_tuple()}")
    return report
