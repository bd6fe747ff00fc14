"""Canonical labelling of (vertex-coloured) graphs.

Individualisation-refinement search: the ordered partition is refined to an
equitable one, the first smallest non-singleton cell is branched on, and the
canonical labelling is the leaf whose relabelled adjacency is lexicographically
least.  Automorphisms discovered at leaves prune sibling branches (orbit
pruning plus jump-back to the common prefix), which keeps highly symmetric
inputs such as banana graphs tractable.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, Hypergraph, iter_bits
from .io import to_graph6


def _mask(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(adj: Sequence[int], cells: list[list[int]], splitters=None) -> list[list[int]]:
    """Refine an ordered partition to the coarsest equitable refinement.

    ``splitters`` defaults to every cell.  Fragments of a split cell are
    ordered by neighbour count, so the result depends only on the partition
    structure and never on vertex names.
    """
    n_total = sum(len(c) for c in cells)
    queue = deque(cells if splitters is None else splitters)
    live = {id(c) for c in queue}
    while queue and len(cells) < n_total:
        s = queue.popleft()
        if id(s) not in live:
            continue
        live.discard(id(s))
        smask = _mask(s)
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            counts = [(adj[v] & smask).bit_count() for v in c]
            c0 = counts[0]
            for x in counts:
                if x != c0:
                    break
            else:
                new_cells.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v, x in zip(c, counts):
                groups.setdefault(x, []).append(v)
            frags = [groups[x] for x in sorted(groups)]
            new_cells.extend(frags)
            if id(c) in live:
                live.discard(id(c))
                add = frags
            else:
                big = max(range(len(frags)), key=lambda i: (len(frags[i]), -i))
                add = [f for i, f in enumerate(frags) if i != big]
            for f in add:
                queue.append(f)
                live.add(id(f))
        cells = new_cells
    return cells


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.first_path = None
        self.first_cert = None
        self.best_path = None
        self.best_cert = None
        self.best_perm = None
        self.generators: list[list[int]] = []

    def _leaf(self, cells):
        perm = [0] * self.n
        for pos, c in enumerate(cells):
            perm[c[0]] = pos
        rows = [0] * self.n
        for v, nb in enumerate(self.adj):
            m = 0
            for u in iter_bits(nb):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return perm, tuple(rows)

    def _orbit_roots(self, prefix):
        fixed = set(prefix)
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[v] == v for v in fixed):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def _automorphism(self, perm_a, perm_b):
        inv_a = [0] * self.n
        for v, p in enumerate(perm_a):
            inv_a[p] = v
        return [inv_a[perm_b[v]] for v in range(self.n)]

    @staticmethod
    def _common(p, q):
        i = 0
        while i < len(p) and i < len(q) and p[i] == q[i]:
            i += 1
        return i

    def run(self, cells, prefix):
        """Explore the node reached by individualising ``prefix``.

        Returns a depth to jump back to, or None when the subtree was
        exhausted normally.
        """
        if len(cells) == self.n:
            perm, cert = self._leaf(cells)
            if self.first_cert is None:
                self.first_path, self.first_cert = list(prefix), cert
                self.best_path, self.best_cert, self.best_perm = list(prefix), cert, perm
                self._first_perm = perm
                return None
            if cert == self.first_cert:
                self.generators.append(self._automorphism(self._first_perm, perm))
                return self._common(prefix, self.first_path)
            if cert == self.best_cert:
                self.generators.append(self._automorphism(self.best_perm, perm))
                return self._common(prefix, self.best_path)
            if cert < self.best_cert:
                self.best_path, self.best_cert, self.best_perm = list(prefix), cert, perm
            return None

        # first smallest non-singleton cell
        ti = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (ti is None or len(c) < len(cells[ti])):
                ti = i
        target = cells[ti]
        depth = len(prefix)
        explored: list[int] = []
        find, known = None, -1
        for w in sorted(target):
            if explored:
                # orbits only change when a new automorphism turns up
                if known != len(self.generators):
                    find, known = self._orbit_roots(prefix), len(self.generators)
                rw = find(w)
                if any(find(x) == rw for x in explored):
                    continue
            single = [w]
            rest = [v for v in target if v != w]
            child = cells[:ti] + [single, rest] + cells[ti + 1:]
            child = refine(self.adj, child, [single])
            explored.append(w)
            jump = self.run(child, prefix + [w])
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None):
    """Return ``(perm, generators)``.

    ``perm[v]`` is the canonical position of vertex ``v``; ``generators`` are
    automorphisms found during the search (not necessarily a full generating
    set).  With ``colors``, only colour-preserving relabellings are allowed and
    colour classes are placed in increasing colour order.
    """
    n = g.n
    if n == 0:
        return [], []
    if colors is None:
        cells = [list(range(n))]
    else:
        by = {}
        for v, c in enumerate(colors):
            by.setdefault(c, []).append(v)
        cells = [by[c] for c in sorted(by)]
    cells = refine(g.adj, cells)
    s = _Search(g.adj)
    s.run(cells, [])
    return s.best_perm, s.generators


def canonical_graph(g: Graph, colors: Sequence[int] | None = None) -> Graph:
    perm, _ = canonical_labeling(g, colors)
    return g.relabel(perm)


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Isomorphism-invariant byte label: graph6 of the canonical relabelling.

    For coloured graphs the sorted colour sequence is appended, so graphs with
    different colour multisets never collide.
    """
    perm, _ = canonical_labeling(g, colors)
    label = to_graph6(g.relabel(perm)).encode("ascii")
    if colors is not None:
        label += b"|" + ",".join(map(str, sorted(colors))).encode("ascii")
    return label


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def incidence_graph(h: Hypergraph) -> tuple[Graph, list[int]]:
    """Bipartite vertex/hyperedge incidence graph with colours 0 (vertex), 1 (edge)."""
    n = h.n
    edges = []
    for j, e in enumerate(h.edges):
        for v in e:
            edges.append((v, n + j))
    g = Graph.from_edges(n + len(h.edges), edges)
    colors = [0] * n + [1] * len(h.edges)
    return g, colors


def hypergraph_canonical_form(h: Hypergraph) -> bytes:
    g, colors = incidence_graph(h)
    return canonical_form(g, colors)


def canonical_hypergraph(h: Hypergraph) -> Hypergraph:
    """Relabel the vertices of ``h`` canonically."""
    g, colors = incidence_graph(h)
    perm, _ = canonical_labeling(g, colors)
    # vertex classes keep colour order, so vertex positions are 0..n-1
    return Hypergraph(h.n, [tuple(perm[v] for v in e) for e in h.edges])
