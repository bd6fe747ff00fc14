"""Subgraph counting, freeness tests and symmetry queries on :class:`Graph`."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .canon import canonical_form, is_isomorphic  # noqa: F401  (re-exported)
from .embed import count_embeddings, find_embedding
from .errors import PreconditionError
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class CopyCount:
    """Number of copies of ``pattern`` in some host with ``host_size`` vertices."""

    value: int
    pattern: Graph
    host_size: int

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, CopyCount):
            return (self.value, self.pattern, self.host_size) == (other.value, other.pattern, other.host_size)
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < int(other)

    def __le__(self, other):
        return self.value <= int(other)

    def __gt__(self, other):
        return self.value > int(other)

    def __ge__(self, other):
        return self.value >= int(other)

    def __hash__(self):
        return hash(self.value)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def clique_count(g: Graph, t: int) -> int:
    """Number of t-vertex cliques; ``t = 0`` counts the empty clique once."""
    if t == 0:
        return 1
    if t == 1:
        return g.n
    if t == 2:
        return g.edge_count
    adj = g.adj

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only higher-numbered neighbours, so each clique is seen once
            total += rec(cand & adj[v], need - 1)
        return total

    return rec((1 << g.n) - 1, t)


def iter_cliques(g: Graph, t: int):
    """Yield t-cliques as increasing vertex tuples."""
    adj = g.adj

    def rec(prefix, cand, need):
        if need == 0:
            yield tuple(prefix)
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            prefix.append(v)
            yield from rec(prefix, cand & adj[v], need - 1)
            prefix.pop()

    yield from rec([], (1 << g.n) - 1, t)


@lru_cache(maxsize=4096)
def automorphism_count(g: Graph) -> int:
    """|Aut(g)|, counted as the embeddings of ``g`` into itself."""
    if g.n < 1:
        raise PreconditionError("n >= 1", "automorphism_count of the empty graph")
    return count_embeddings(g, g)


def count_copies(h: Graph, g: Graph) -> CopyCount:
    """Number of (not necessarily induced) subgraphs of ``g`` isomorphic to ``h``."""
    if h.n < 1:
        raise PreconditionError("H has >= 1 vertex", "empty pattern")
    if h.n > g.n:
        return CopyCount(0, h, g.n)
    if is_complete(h):
        value = clique_count(g, h.n)
    else:
        value = count_embeddings(h, g) // automorphism_count(h)
    return CopyCount(value, h, g.n)


def is_free(g: Graph, f: Graph) -> bool:
    """True iff ``g`` contains no copy of ``f``; stops at the first embedding."""
    if f.n > g.n:
        return True
    if f.edge_count > g.edge_count:
        return True
    return find_embedding(f, g) is None


def is_free_of_all(g: Graph, forbidden) -> bool:
    return all(is_free(g, f) for f in forbidden)


def creates_copy_at_vertex(g: Graph, f: Graph, v: int) -> bool:
    """True iff ``g`` has a copy of ``f`` using vertex ``v``."""
    if f.n > g.n:
        return False
    deg_v = g.degree(v)
    for p in range(f.n):
        if f.degree(p) <= deg_v and find_embedding(f, g, [(p, v)]) is not None:
            return True
    return False


def creates_copy_at_edge(g: Graph, f: Graph, u: int, v: int) -> bool:
    """True iff ``g`` has a copy of ``f`` using the edge ``uv``."""
    if f.n > g.n:
        return False
    for a, b in f.edges():
        for x, y in ((u, v), (v, u)):
            if find_embedding(f, g, [(a, x), (b, y)]) is not None:
                return True
    return False


def codegree(g: Graph, u: int, v: int) -> int:
    return (g.adj[u] & g.adj[v]).bit_count()


def max_codegree(g: Graph) -> int:
    """Largest number of common neighbours over all vertex pairs."""
    if g.n < 2:
        raise PreconditionError("n >= 2", f"max_codegree needs two vertices, got n={g.n}")
    adj = g.adj
    return max((adj[u] & adj[v]).bit_count() for u, v in combinations(range(g.n), 2))


def neighbourhood_list(g: Graph) -> list[list[int]]:
    return [list(iter_bits(nb)) for nb in g.adj]
