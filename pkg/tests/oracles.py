"""Independent brute-force oracles.

Nothing here calls the package's search code: embeddings come from raw
permutations, isomorphism from networkx, and Berge copies from exhaustive
assignment.  Only the tiny Graph/Hypergraph containers are shared.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import networkx as nx

from genturan.graph import Graph, Hypergraph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def edge_set(g: Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def injective_maps(h: Graph, g: Graph) -> int:
    """Count adjacency-preserving injections by trying every ordered vertex tuple."""
    es = edge_set(g)
    total = 0
    for image in permutations(range(g.n), h.n):
        if all(frozenset((image[u], image[v])) in es for u, v in h.edges()):
            total += 1
    return total


def automorphisms(h: Graph) -> int:
    return injective_maps(h, h)


def copies(h: Graph, g: Graph) -> int:
    """Distinct edge sets of subgraphs isomorphic to h."""
    es = edge_set(g)
    seen = set()
    for image in permutations(range(g.n), h.n):
        mapped = frozenset(frozenset((image[u], image[v])) for u, v in h.edges())
        if mapped <= es:
            seen.add((mapped, frozenset(image)))
    return len(seen)


def contains(g: Graph, f: Graph) -> bool:
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(f))
    return matcher.subgraph_is_monomorphic()


def isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def count_classes(graphs) -> int:
    """Isomorphism classes by pairwise networkx checks, bucketed by degree sequence."""
    buckets: dict[tuple, list[nx.Graph]] = {}
    for g in graphs:
        key = tuple(sorted(g.degrees()))
        x = to_nx(g)
        reps = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(x, y) for y in reps):
            reps.append(x)
    return sum(len(v) for v in buckets.values())


def brute_extremal(n: int, h: Graph, forbidden) -> int:
    """Max copies of h over every labelled n-vertex graph avoiding all of forbidden."""
    best = 0
    for g in all_labelled_graphs(n):
        if any(contains(g, f) for f in forbidden):
            continue
        best = max(best, copies(h, g) if h.n <= n else 0)
    return best


def subset_cycles(g: Graph, k: int) -> int:
    """C_k count via k-subsets: each subset contributes its Hamiltonian cycles."""
    es = edge_set(g)
    total = 0
    for sub in combinations(range(g.n), k):
        first, rest = sub[0], sub[1:]
        cyc = 0
        for perm in permutations(rest):
            seq = (first,) + perm
            if all(frozenset((seq[i], seq[(i + 1) % k])) in es for i in range(k)):
                cyc += 1
        total += cyc // 2
    return total


def nx_paths(g: Graph, k: int) -> int:
    """Paths on k vertices, from networkx simple paths between every ordered pair."""
    if k == 1:
        return g.n
    x = to_nx(g)
    total = 0
    for s in range(g.n):
        for t in range(g.n):
            if s != t:
                total += sum(1 for p in nx.all_simple_paths(x, s, t, cutoff=k - 1) if len(p) == k)
    return total // 2


def nx_cliques(g: Graph, t: int) -> int:
    return sum(1 for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == t)


def berge_brute(h: Hypergraph, f: Graph) -> bool:
    """Try every vertex injection and every injective edge-to-hyperedge assignment."""
    edges = list(f.edges())
    sets = [set(e) for e in h.edges]
    for image in permutations(range(h.n), f.n):
        options = [[i for i, s in enumerate(sets) if image[u] in s and image[v] in s] for u, v in edges]
        if any(not o for o in options):
            continue

        def assign(j, used):
            if j == len(edges):
                return True
            return any(assign(j + 1, used | {i}) for i in options[j] if i not in used)

        if assign(0, frozenset()):
            return True
    return False


def c2_brute(h: Hypergraph) -> bool:
    return any(len(set(a) & set(b)) >= 2 for a, b in combinations(h.edges, 2))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_k2t_free(n: int, t: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Random edge order, keeping an edge only if all codegrees stay below t."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    nbrs = [set() for _ in range(n)]
    for u, v in pairs:
        if rng.random() > p:
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
        ok = all(len(nbrs[x] & nbrs[y]) <= t - 1 for x, y in combinations(range(n), 2))
        if not ok:
            nbrs[u].discard(v)
            nbrs[v].discard(u)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in nbrs[u] if u < v])


def longest_path_vertices(g: Graph, comp) -> int:
    x = to_nx(g).subgraph(comp)
    best = 1
    for s in comp:
        for t in comp:
            if s < t:
                for p in nx.all_simple_paths(x, s, t):
                    best = max(best, len(p))
    return best
