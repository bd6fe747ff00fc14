"""Path, cycle and clique counters plus finite-n bounds for K_{2,t}-free hosts.

The certified upper bounds are tuple-counting inequalities valid for every
K_{2,t}-free graph with the given vertex and edge counts; the greedy lower
certificates apply to Füredi graphs; the predictors are leading terms only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, isqrt

from .core import CopyCount, clique_count
from .errors import PreconditionError
from .gf import is_prime_power
from .graph import Graph, complete_graph, cycle_graph, iter_bits, path_graph

UPPER = "upper"
LOWER = "lower"

FORMULA_IDS = (
    "cycle-even",
    "cycle-odd",
    "path",
    "c4",
    "kst-edges",
    "turan-clique",
    "greedy-cycle-lb",
    "greedy-path-lb",
    "asymptotic",
)


@dataclass(frozen=True)
class BoundReport:
    formula_id: str
    inputs: dict = field(compare=False)
    value: int | Fraction
    direction: str

    def __post_init__(self):
        if self.formula_id not in FORMULA_IDS:
            raise ValueError(f"unknown formula id {self.formula_id!r}")
        if self.value < 0:
            raise ValueError("bound value must be non-negative")
        if self.direction not in (UPPER, LOWER):
            raise ValueError(f"bad direction {self.direction!r}")


def count_paths(g: Graph, k: int) -> CopyCount:
    """Number of k-vertex paths (unlabelled, not necessarily induced)."""
    if k < 1:
        raise PreconditionError("k >= 1", f"got k={k}")
    pattern = path_graph(k)
    if k == 1:
        return CopyCount(g.n, pattern, g.n)
    adj = g.adj
    last = k - 1

    def rec(v, used, depth):
        cand = adj[v] & ~used
        if depth == last:
            return cand.bit_count()
        total = 0
        for w in iter_bits(cand):
            total += rec(w, used | (1 << w), depth + 1)
        return total

    walks = sum(rec(s, 1 << s, 1) for s in range(g.n))
    return CopyCount(walks // 2, pattern, g.n)


def count_cycles(g: Graph, k: int) -> CopyCount:
    """Number of k-cycles: closed traversals with least vertex first, halved for direction."""
    if k < 3:
        raise PreconditionError("k >= 3", f"got k={k}")
    adj = g.adj
    total = 0
    for s in range(g.n):
        allowed = ~((1 << (s + 1)) - 1)
        close = adj[s] & allowed

        def rec(v, used, depth):
            cand = adj[v] & allowed & ~used
            if depth == k - 1:
                return (cand & close).bit_count()
            t = 0
            for w in iter_bits(cand):
                t += rec(w, used | (1 << w), depth + 1)
            return t

        if close.bit_count() >= 2:
            total += rec(s, 1 << s, 1)
    return CopyCount(total // 2, cycle_graph(k), g.n)


def count_cliques(g: Graph, t: int) -> CopyCount:
    if t < 1:
        raise PreconditionError("t >= 1", f"got t={t}")
    return CopyCount(clique_count(g, t), complete_graph(t), g.n)


def elementary_symmetric(values, t: int) -> int:
    """e_t(values) by the usual dynamic programme."""
    e = [1] + [0] * t
    for x in values:
        for j in range(t, 0, -1):
            e[j] += e[j - 1] * x
    return e[t]


def turan_clique_count(n: int, k: int, t: int) -> int:
    """Exact number of K_t in T_{k-1}(n): sum over t-sets of classes of size products."""
    if k < 2 or t < 1:
        raise PreconditionError("k >= 2, t >= 1", f"got k={k}, t={t}")
    from .constructions import turan_class_sizes

    return elementary_symmetric(turan_class_sizes(n, k - 1), t)


def certified_cycle_bound(n: int, e: int, t: int, k: int) -> BoundReport:
    """Upper bound on the number of C_k in any n-vertex, e-edge K_{2,t}-free graph.

    Even k: (t-1)^{k/2} n^{k/2} / 2k.  Odd k: e n^{(k-3)/2} (t-1)^{(k-1)/2} / k.
    Both are floored.
    """
    if k < 5:
        raise PreconditionError("k >= 5", f"got k={k}")
    if t < 2:
        raise PreconditionError("t >= 2", f"got t={t}")
    inputs = {"n": n, "e": e, "t": t, "k": k}
    if k % 2 == 0:
        value = ((t - 1) ** (k // 2) * n ** (k // 2)) // (2 * k)
        return BoundReport("cycle-even", inputs, value, UPPER)
    value = (e * n ** ((k - 3) // 2) * (t - 1) ** ((k - 1) // 2)) // k
    return BoundReport("cycle-odd", inputs, value, UPPER)


def certified_path_bound(n: int, e: int, t: int, k: int) -> BoundReport:
    """Upper bound on the number of P_k in any n-vertex, e-edge K_{2,t}-free graph."""
    if k < 2:
        raise PreconditionError("k >= 2", f"got k={k}")
    if t < 2:
        raise PreconditionError("t >= 2", f"got t={t}")
    if k % 2:
        value = (n ** ((k + 1) // 2) * (t - 1) ** ((k - 1) // 2)) // 2
    else:
        value = (2 * e * n ** ((k - 2) // 2) * (t - 1) ** ((k - 2) // 2)) // 2
    return BoundReport("path", {"n": n, "e": e, "t": t, "k": k}, value, UPPER)


def certified_c4_bound(n: int, t: int) -> BoundReport:
    """binom(n,2) binom(t-1,2) / 2, floored; zero when t = 2."""
    if t < 2:
        raise PreconditionError("t >= 2", f"got t={t}")
    return BoundReport("c4", {"n": n, "t": t}, comb(n, 2) * comb(t - 1, 2) // 2, UPPER)


def greedy_path_lower(n: int, q: int, k: int) -> int:
    """floor(n (q-k+1)^{k-1} / 2), the greedy count of P_k in a graph of min degree q-1."""
    return n * max(q - k + 1, 0) ** (k - 1) // 2


def greedy_cycle_lower(n: int, q: int, t: int, k: int) -> int:
    """floor(n (q - t(k-3))^{k-2} (t-1) / 2k), the greedy C_k count in F_{q,t}."""
    return n * max(q - t * (k - 3), 0) ** (k - 2) * (t - 1) // (2 * k)


def greedy_lower_certificates(q: int, t: int, k: int) -> tuple[BoundReport, BoundReport | None]:
    """Lower certificates for the number of P_k and C_k in F_{q,t}.

    The cycle certificate needs k >= 5 and is None otherwise.
    """
    if not is_prime_power(q):
        raise PreconditionError("q a prime power", f"{q} is not a prime power")
    if t < 2 or (q - 1) % (t - 1):
        raise PreconditionError("(t-1) divides (q-1)", f"q={q}, t={t}")
    if k < 2:
        raise PreconditionError("k >= 2", f"got k={k}")
    if q <= t * (k - 3) + k:
        raise PreconditionError("q > t(k-3)+k", f"q={q}, t={t}, k={k}")
    n = (q * q - 1) // (t - 1)
    inputs = {"n": n, "q": q, "t": t, "k": k}
    path = BoundReport("greedy-path-lb", inputs, greedy_path_lower(n, q, k), LOWER)
    cycle = None
    if k >= 5:
        cycle = BoundReport("greedy-cycle-lb", inputs, greedy_cycle_lower(n, q, t, k), LOWER)
    return path, cycle


_PRECISION = 60


def _power(base: Fraction, num: int, den: int) -> Fraction:
    """base**(num/den) for den in {1, 2}.

    Exact whenever the result is rational; otherwise a rational within about
    10**-50 relative error.
    """
    base = Fraction(base)
    if den == 1 or num % 2 == 0:
        return base ** (num // den)
    a, b = base.numerator, base.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb) ** num
    with localcontext() as ctx:
        ctx.prec = _PRECISION
        root = (Decimal(a) / Decimal(b)).sqrt()
        return Fraction(root) ** num


PREDICTOR_IDS = ("cycle", "path", "c4", "kst-edges", "turan-clique")


def asymptotic_predictor(formula_id: str, n: int, t: int, k: int = 0) -> Fraction:
    """Leading term of the asymptotic count, for ratio diagnostics only.

    ``turan-clique`` reads ``t`` as the clique size and ``k`` as the forbidden
    clique, i.e. binom(k-1,t) (n/(k-1))^t.
    """
    n = Fraction(n)
    if formula_id == "cycle":
        return _power(Fraction(t - 1) * n, k, 2) / (2 * k)
    if formula_id == "path":
        return _power(Fraction(t - 1), k - 1, 2) * _power(n, k + 1, 2) / 2
    if formula_id == "c4":
        return Fraction(comb(t - 1, 2)) * n * n / 4
    if formula_id == "kst-edges":
        return _power(Fraction(t - 1), 1, 2) * _power(n, 3, 2) / 2
    if formula_id == "turan-clique":
        return comb(k - 1, t) * (n / (k - 1)) ** t
    raise PreconditionError("known formula id", f"unknown predictor {formula_id!r}; choose from {PREDICTOR_IDS}")
