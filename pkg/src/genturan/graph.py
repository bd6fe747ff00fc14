"""Immutable simple graphs and hypergraphs on vertex set ``range(n)``.

Adjacency is stored as one integer bitmask per vertex, which keeps neighbourhood
intersections and degree queries cheap in the search-heavy code elsewhere.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple undirected graph.

    Instances are immutable and hashable; equality is labelled equality (same
    ``n`` and same edge set), not isomorphism.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] = ()):
        if n < 0:
            raise PreconditionError("n >= 0", f"vertex count {n} is negative")
        if not adj:
            adj = (0,) * n
        if len(adj) != n:
            raise PreconditionError("len(adj) == n", "adjacency length mismatch")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full or (nb >> v) & 1:
                raise PreconditionError("no loops", f"bad neighbourhood for vertex {v}")
            for u in iter_bits(nb):
                if not (adj[u] >> v) & 1:
                    raise PreconditionError("symmetric adjacency", f"edge {v}-{u} is one-sided")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "_hash", None)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError("no loops", f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError("edge endpoints in range", f"edge ({u}, {v}) with n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def add_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, adj)

    def add_vertex(self, neighbours: int = 0) -> "Graph":
        """Return a copy with a new vertex ``n`` joined to the bitmask ``neighbours``."""
        n = self.n
        adj = [nb | (((neighbours >> v) & 1) << n) for v, nb in enumerate(self.adj)]
        adj.append(neighbours)
        return Graph._trusted(n + 1, adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v, nb in enumerate(self.adj):
            m = 0
            for u in iter_bits(nb):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph._trusted(self.n, adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in iter_bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph._trusted(len(vertices), adj)

    def disjoint_union(self, other: "Graph") -> "Graph":
        s = self.n
        adj = list(self.adj) + [nb << s for nb in other.adj]
        return Graph._trusted(s + other.n, adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)])

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(iter_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.components())

    def distances_from(self, s: int) -> list[int]:
        """BFS distances from ``s``; unreachable vertices get -1."""
        dist = [-1] * self.n
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in iter_bits(frontier):
                dist[v] = d
        return dist

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


class Hypergraph:
    """Set system on ``range(n)``: distinct hyperedges, each of size at least two.

    Hyperedges are kept as a sorted tuple of sorted vertex tuples, so two
    hypergraphs with the same edge set compare equal regardless of input order.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise PreconditionError("n >= 0", f"vertex count {n} is negative")
        norm = set()
        for e in edges:
            t = tuple(sorted(set(e)))
            if len(t) < 2:
                raise PreconditionError("hyperedge size >= 2", f"hyperedge {t} too small")
            if t[0] < 0 or t[-1] >= n:
                raise PreconditionError("hyperedge within vertex set", f"hyperedge {t} with n={n}")
            if t in norm:
                raise PreconditionError("no duplicate hyperedges", f"hyperedge {t} repeated")
            norm.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm, key=lambda t: (len(t), t))))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    def __reduce__(self):
        return (Hypergraph, (self.n, self.edges))

    def __len__(self):
        return len(self.edges)

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    def masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]

    def shadow(self, i: int) -> set[tuple[int, ...]]:
        """All ``i``-subsets of hyperedges."""
        out = set()
        for e in self.edges:
            out.update(combinations(e, i))
        return out

    def add_edge(self, e: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.n, list(self.edges) + [tuple(e)])

    def __eq__(self, other):
        return isinstance(other, Hypergraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={list(self.edges)})"


# Small named graphs used throughout.

def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def path_graph(k: int) -> Graph:
    """P_k: the path on ``k`` vertices."""
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise PreconditionError("k >= 3", "simple cycles need at least three vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star_graph(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    return complete_bipartite(1, m)
