"""Backtracking subgraph embeddings (injective, adjacency-preserving, not induced)."""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph, iter_bits


def pattern_order(h: Graph, start: Sequence[int] = ()) -> list[int]:
    """Order pattern vertices so each one has as many earlier neighbours as possible.

    ``start`` vertices come first in the given order.  Vertices of degree at
    least two come before leaves, so the skeletons of all components are
    placed before any leaf; within that the next vertex maximises (earlier
    neighbours, degree).  Isolated vertices go last.
    """
    order = list(start)
    placed = 0
    for v in order:
        placed |= 1 << v
    deg = h.degrees()
    remaining = [v for v in range(h.n) if not (placed >> v) & 1]
    while remaining:
        best = None
        best_key = None
        for v in remaining:
            key = (deg[v] > 1, (h.adj[v] & placed).bit_count(), deg[v] > 0, deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


class _Plan:
    """Precomputed backtracking plan for one pattern/host pair."""

    def __init__(self, h: Graph, g: Graph, anchor: Sequence[tuple[int, int]] = (), twins: bool = False):
        self.h = h
        self.g = g
        self.order = pattern_order(h, [p for p, _ in anchor])
        pos = {p: i for i, p in enumerate(self.order)}
        self.back = [[pos[u] for u in iter_bits(h.adj[p]) if pos[u] < i] for i, p in enumerate(self.order)]
        gdeg = g.degrees()
        self.deg_ok = []
        for p in self.order:
            d = h.degree(p)
            m = 0
            for v in range(g.n):
                if gdeg[v] >= d:
                    m |= 1 << v
            self.deg_ok.append(m)
        self.fixed = [None] * h.n
        for p, v in anchor:
            self.fixed[pos[p]] = v
        self.k = h.n
        # leaves hanging off the same vertex are interchangeable; when only
        # existence matters their images are forced to increase
        self.twin_prev = [None] * h.n
        if twins:
            anchored = {p for p, _ in anchor}
            last_leaf = {}
            for i, p in enumerate(self.order):
                if h.degree(p) == 1 and p not in anchored:
                    parent = h.adj[p].bit_length() - 1
                    self.twin_prev[i] = last_leaf.get(parent)
                    last_leaf[parent] = i

    def candidates(self, i: int, image: list[int], used: int) -> int:
        f = self.fixed[i]
        if f is not None:
            cand = 1 << f
        else:
            cand = self.deg_ok[i]
        gadj = self.g.adj
        for j in self.back[i]:
            cand &= gadj[image[j]]
        t = self.twin_prev[i]
        if t is not None:
            cand &= -1 << (image[t] + 1)
        return cand & ~used


def iter_embeddings(h: Graph, g: Graph, anchor: Sequence[tuple[int, int]] = ()) -> Iterator[dict[int, int]]:
    """Yield every embedding of ``h`` into ``g`` as a dict pattern-vertex -> host-vertex.

    ``anchor`` pins pattern vertices to host vertices.
    """
    if h.n > g.n:
        return
    if h.n == 0:
        yield {}
        return
    plan = _Plan(h, g, anchor)
    image = [0] * plan.k
    order = plan.order

    def rec(i, used):
        cand = plan.candidates(i, image, used)
        for v in iter_bits(cand):
            image[i] = v
            if i + 1 == plan.k:
                yield {order[j]: image[j] for j in range(plan.k)}
            else:
                yield from rec(i + 1, used | (1 << v))

    yield from rec(0, 0)


def find_embedding(h: Graph, g: Graph, anchor: Sequence[tuple[int, int]] = ()) -> dict[int, int] | None:
    """First embedding found, or None; candidates are tried in descending host degree."""
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}
    plan = _Plan(h, g, anchor, twins=True)
    gdeg = g.degrees()
    by_degree = sorted(range(g.n), key=lambda v: (-gdeg[v], v))
    image = [0] * plan.k

    def rec(i, used):
        cand = plan.candidates(i, image, used)
        if not cand:
            return False
        if cand & (cand - 1) == 0:
            verts = [cand.bit_length() - 1]
        else:
            verts = [v for v in by_degree if (cand >> v) & 1]
        for v in verts:
            image[i] = v
            if i + 1 == plan.k or rec(i + 1, used | (1 << v)):
                return True
        return False

    if rec(0, 0):
        return {plan.order[j]: image[j] for j in range(plan.k)}
    return None


def count_embeddings(h: Graph, g: Graph, anchor: Sequence[tuple[int, int]] = ()) -> int:
    """Number of injective adjacency-preserving maps V(h) -> V(g)."""
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    plan = _Plan(h, g, anchor)
    image = [0] * plan.k
    last = plan.k - 1

    def rec(i, used):
        cand = plan.candidates(i, image, used)
        if i == last:
            return cand.bit_count()
        total = 0
        for v in iter_bits(cand):
            image[i] = v
            total += rec(i + 1, used | (1 << v))
        return total

    return rec(0, 0)


def is_embedding(h: Graph, g: Graph, mapping: dict[int, int]) -> bool:
    """Independent check that ``mapping`` is an injective adjacency-preserving map."""
    if set(mapping) != set(range(h.n)):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images) or not all(0 <= v < g.n for v in images):
        return False
    return all(g.has_edge(mapping[u], mapping[v]) for u, v in h.edges())
