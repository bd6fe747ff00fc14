"""Linear versus quadratic growth of ex(n, C_k, F).

For k = 4, 5 the count is linear exactly when F sits inside C_k^{**r} for some
r; for k > 5 when F sits inside C_k^{*r} or is a forest contained in every
R_k^r-graph.  Every other F admits a family with quadratically many C_k and
no copy of F.  The verdict carries a certificate that can be re-checked with
the embedding and freeness primitives.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_form
from .constructions import all_r_graphs, c_double_star, c_star, furedi_graph, r_graph, r_graph_parameters
from .core import is_free
from .counting import count_cycles
from .embed import find_embedding, is_embedding
from .errors import GenTuranError, PreconditionError
from .graph import Graph, complete_bipartite, cycle_graph

LINEAR = "linear"
QUADRATIC = "quadratic"
GROWTH_EXPONENT = 1.5


# ---------------------------------------------------------------------------
# forest structure


def _component_longest_path(g: Graph, comp: list[int]) -> int:
    """Vertex count of a longest path inside one component."""
    if len(comp) == 1:
        return 1
    edges_in = sum(g.degree(v) for v in comp) // 2
    if edges_in == len(comp) - 1:
        # tree: double sweep
        far = max(comp, key=lambda v: (g.distances_from(comp[0])[v], -v))
        dist = g.distances_from(far)
        return max(dist[v] for v in comp) + 1
    adj = g.adj
    best = 1

    def rec(v, used, length):
        nonlocal best
        if length > best:
            best = length
        if best == len(comp):
            return
        cand = adj[v] & ~used
        while cand:
            low = cand & -cand
            rec(low.bit_length() - 1, used | low, length + 1)
            cand ^= low

    for s in comp:
        rec(s, 1 << s, 1)
        if best == len(comp):
            break
    return best


def c_of(f: Graph) -> int:
    """Sum of longest-path vertex counts over the components with at least one edge."""
    return sum(_component_longest_path(f, comp) for comp in f.components() if len(comp) > 1)


def _is_star(g: Graph, comp: list[int]) -> bool:
    """K_{1,m} with m >= 2."""
    if len(comp) < 3 or sum(g.degree(v) for v in comp) != 2 * (len(comp) - 1):
        return False
    return max(g.degree(v) for v in comp) == len(comp) - 1


def _is_broom(g: Graph, comp: list[int]) -> bool:
    """A path with extra leaves attached at one of its ends (trees only)."""
    high = [v for v in comp if g.degree(v) > 2]
    if not high:
        return True
    if len(high) > 1:
        return False
    non_leaf = [w for w in g.neighbors(high[0]) if g.degree(w) > 1]
    return len(non_leaf) <= 1


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    longest_path: int
    high_degree: int
    is_path: bool
    is_star: bool
    is_broom: bool


@dataclass(frozen=True)
class ForestProfile:
    k: int
    components: tuple[ComponentInfo, ...]
    c_value: int
    properties: tuple[bool, ...]  # items 1..7

    @property
    def all_hold(self) -> bool:
        return all(self.properties)


def forest_properties(f: Graph, k: int) -> ForestProfile:
    """Evaluate the seven necessary conditions for being an F_k^r-graph."""
    if not f.is_forest():
        raise PreconditionError("F is a forest", "forest_properties needs an acyclic graph")
    if k <= 5:
        raise PreconditionError("k > 5", f"got k={k}")
    comps = []
    for comp in f.components():
        if len(comp) == 1:
            continue
        high = sum(1 for v in comp if f.degree(v) > 2)
        comps.append(
            ComponentInfo(
                tuple(comp),
                _component_longest_path(f, comp),
                high,
                high == 0,
                _is_star(f, comp),
                _is_broom(f, comp),
            )
        )
    high_vertices = [v for v in range(f.n) if f.degree(v) > 2]
    c = sum(ci.longest_path for ci in comps)
    p1 = len(high_vertices) <= 2
    p2 = all(ci.high_degree <= 1 for ci in comps)
    p3 = all(sum(1 for w in f.neighbors(v) if f.degree(w) == 2) <= 2 for v in high_vertices)
    if len(high_vertices) == 2:
        p4 = any(ci.is_broom for ci in comps if ci.high_degree > 0)
    else:
        p4 = True
    p5 = max((ci.longest_path for ci in comps), default=0) <= k
    p6 = c <= k + 4
    if c == k + 4:
        p7 = sum(1 for ci in comps if ci.is_star) >= 3 and all(ci.is_star for ci in comps if ci.high_degree > 0)
    else:
        p7 = True
    return ForestProfile(k, tuple(comps), c, (p1, p2, p3, p4, p5, p6, p7))


def _check_fkr_args(k, r):
    if k <= 5:
        raise PreconditionError("k > 5", f"F_k^r-graphs are defined for k > 5, got {k}")
    if r < 1:
        raise PreconditionError("r >= 1", f"got r={r}")


def is_fkr_forest(k: int, r: int, f: Graph) -> tuple[bool, list]:
    """Whether ``f`` is a forest inside every R_k^r-graph.

    Returns ``(True, [(params, embedding), ...])`` with one embedding per
    isomorphism class of R_k^r-graph, or ``(False, [])``.
    """
    _check_fkr_args(k, r)
    if not f.is_forest():
        return False, []
    out = []
    for params, host in all_r_graphs(k, r, with_params=True):
        emb = find_embedding(f, host)
        if emb is None:
            return False, []
        out.append((params, emb))
    return True, out


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class LinearityVerdict:
    """Outcome of the classification with a re-checkable certificate.

    Linear verdicts record the host kind, the least r for which the host
    contains F, and the embeddings.  Quadratic verdicts record a named family,
    its parameters, one member verified F-free and a growth sample
    ``((n1, count1), (n2, count2))`` of C_k counts on two members.
    """

    k: int
    pattern: Graph
    verdict: str
    r0: int
    host: str | None = None
    r: int | None = None
    embeddings: tuple = ()
    family: str | None = None
    parameters: tuple = ()
    member: Graph | None = None
    growth: tuple = field(default=(), compare=False)

    @property
    def linear(self) -> bool:
        return self.verdict == LINEAR

    def host_graphs(self) -> list[Graph]:
        if self.host == "c_star":
            return [c_star(self.k, self.r)]
        if self.host == "c_double_star":
            return [c_double_star(self.k, self.r)]
        if self.host == "fkr-forest":
            return [r_graph(self.k, self.r, *p) for p, _ in self.embeddings]
        return []

    def verify(self) -> bool:
        """Re-check the certificate from scratch."""
        if self.linear:
            hosts = self.host_graphs()
            maps = [m for _, m in self.embeddings]
            return len(hosts) == len(maps) > 0 and all(is_embedding(self.pattern, h, m) for h, m in zip(hosts, maps))
        return self.member is not None and is_free(self.member, self.pattern) and self.growth_ok()

    def growth_ok(self) -> bool:
        if len(self.growth) != 2:
            return False
        (n1, c1), (n2, c2) = self.growth
        return c1 > 0 and n2 > n1 and c2 / c1 >= (n2 / n1) ** GROWTH_EXPONENT

    def report(self) -> str:
        from .io import to_graph6

        lines = [f"k={self.k}", f"F={to_graph6(self.pattern)}", f"verdict={self.verdict}", f"r0={self.r0}"]
        if self.linear:
            lines.append(f"host={self.host}")
            lines.append(f"r={self.r}")
            for params, emb in self.embeddings:
                tag = ",".join(map(str, params)) if params else self.host
                lines.append(f"embedding[{tag}]=" + " ".join(f"{u}->{emb[u]}" for u in sorted(emb)))
        else:
            lines.append(f"family={self.family}")
            lines.append("parameters=" + ",".join(map(str, self.parameters)))
            lines.append(f"member={to_graph6(self.member)}")
            for n, c in self.growth:
                lines.append(f"growth n={n} count={c}")
        return "\n".join(lines)

    def csv_row(self) -> list[str]:
        from .io import to_graph6

        cert = self.host if self.linear else self.family
        params = str(self.r) if self.linear else ",".join(map(str, self.parameters))
        return [str(self.k), to_graph6(self.pattern), self.verdict, str(self.r0), cert or "", params]


VERDICT_HEADER = ["k", "F_g6", "verdict", "r0", "certificate", "parameters"]


def _least_r(build, f: Graph, r_max: int):
    """Least r in [0, r_max] with F inside build(r), plus the embedding."""
    if find_embedding(f, build(r_max)) is None:
        return None
    for r in range(0, r_max + 1):
        host = build(r)
        if host.n < f.n:
            continue
        emb = find_embedding(f, host)
        if emb is not None:
            return r, emb
    return None


def _has_subgraph(f: Graph, pattern: Graph) -> bool:
    return not is_free(f, pattern)


def _furedi_growth(q_pair, t, k):
    out = []
    member = None
    for q in q_pair:
        g = furedi_graph(q, t)
        out.append((g.n, count_cycles(g, k).value))
        if member is None:
            member = g
    return member, tuple(out)


def _furedi_pairs(t: int, k: int):
    if t == 3:
        return (5, 7)
    return (4, 5) if k >= 7 else (5, 7)


def _r_growth(k, params, r1, r2):
    out = []
    for r in (r1, r2):
        g = r_graph(k, r, *params)
        out.append((g.n, count_cycles(g, k).value))
    return tuple(out)


def _r_candidates(k: int, r: int):
    seen = set()
    for params in r_graph_parameters(k):
        g = r_graph(k, r, *params)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield params, g


def classify_linearity(k: int, f: Graph) -> LinearityVerdict:
    """Decide whether ex(n, C_k, F) is O(n) or Omega(n^2), with a certificate."""
    if k < 4:
        raise PreconditionError("k >= 4", f"classification needs k >= 4, got {k}")
    if f.n < 1:
        raise PreconditionError("F has >= 1 vertex", "empty pattern")
    r0 = f.n
    if k in (4, 5):
        hit = _least_r(lambda r: c_double_star(k, r), f, r0)
        if hit is not None:
            r, emb = hit
            return LinearityVerdict(k, f, LINEAR, r0, "c_double_star", r, (((), emb),))
    else:
        hit = _least_r(lambda r: c_star(k, r), f, r0)
        if hit is not None:
            r, emb = hit
            return LinearityVerdict(k, f, LINEAR, r0, "c_star", r, (((), emb),))
        # no prefilter on the seven forest items: the longest-path item fails
        # for r >= 2, where R_k^r-graphs carry paths on k+1 vertices
        if f.is_forest():
            r_fkr = f.n + k
            ok, _ = is_fkr_forest(k, r_fkr, f)
            if ok:
                # report the least r that already works; membership is monotone in r
                for r in range(1, r_fkr + 1):
                    ok_r, embs = is_fkr_forest(k, r, f)
                    if ok_r:
                        return LinearityVerdict(k, f, LINEAR, r_fkr, "fkr-forest", r, tuple(embs))
    return _quadratic(k, f, r0)


def _quadratic(k: int, f: Graph, r0: int) -> LinearityVerdict:
    if k >= 5 and _has_subgraph(f, cycle_graph(4)):
        q1, q2 = _furedi_pairs(2, k)
        member, growth = _furedi_growth((q1, q2), 2, k)
        return LinearityVerdict(k, f, QUADRATIC, r0, family="furedi", parameters=(q1, 2), member=member, growth=growth)
    if k == 4 and _has_subgraph(f, complete_bipartite(2, 3)):
        q1, q2 = _furedi_pairs(3, k)
        member, growth = _furedi_growth((q1, q2), 3, k)
        return LinearityVerdict(k, f, QUADRATIC, r0, family="furedi", parameters=(q1, 3), member=member, growth=growth)
    # an R-graph family that excludes F for every r: F uses at most |V(F)|
    # internal paths of each banana, so checking at r = |V(F)| decides it
    r_check = max(r0, 2)
    for params, big in _r_candidates(k, r_check):
        if is_free(big, f):
            member = r_graph(k, 2, *params)
            growth = _r_growth(k, params, 2, 4)
            return LinearityVerdict(
                k, f, QUADRATIC, r0, family="r_graph", parameters=(2,) + tuple(params), member=member, growth=growth
            )
    raise GenTuranError(f"no quadratic certificate found for k={k}")
