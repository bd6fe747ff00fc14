import csv
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genturan.canon import is_isomorphic
from genturan.constructions import turan_graph
from genturan.core import is_free
from genturan.counting import turan_clique_count
from genturan.errors import LimitExceededError, PreconditionError
from genturan.extremal import (
    EXACT,
    KK_TOLERANCE,
    LEDGER_HEADER,
    RandomConstructionParams,
    append_ledger,
    exact_extremal,
    exponent_lower,
    free_graph_classes,
    heuristic_lower,
    kk_clique_bound,
    kk_shadow_bound,
    kk_solve,
    first_moment_coefficient,
    random_deletion_lower,
    real_binom,
    shadow_bound,
    subtraction_bound,
)
from genturan.graph import complete_bipartite, complete_graph, cycle_graph, path_graph
from oracles import brute_extremal, count_classes, all_labelled_graphs, contains

K2, K3, K4 = complete_graph(2), complete_graph(3), complete_graph(4)


class TestExact:
    def test_examples(self):
        r = exact_extremal(4, K2, [K3])
        assert r.value == 4 and is_isomorphic(r.witness, cycle_graph(4)) and r.method == EXACT
        r = exact_extremal(5, K3, [K4])
        assert r.value == 4 and is_isomorphic(r.witness, turan_graph(5, 4))
        assert exact_extremal(3, cycle_graph(4), [K3]).value == 0

    @pytest.mark.parametrize(
        "n,h,forbidden,expected",
        [
            (5, path_graph(3), [K3], 9),
            (5, cycle_graph(4), [complete_bipartite(2, 3)], 3),
            (5, K3, [cycle_graph(4)], 2),
            (5, cycle_graph(5), [K3], 1),
        ],
    )
    def test_frozen_oracle_values(self, n, h, forbidden, expected):
        assert exact_extremal(n, h, forbidden).value == expected

    @settings(max_examples=12)
    @given(
        st.integers(2, 5),
        st.sampled_from([K2, path_graph(3), K3, cycle_graph(4)]),
        st.sampled_from([K3, cycle_graph(4), path_graph(4), complete_bipartite(1, 3)]),
    )
    def test_matches_brute_force(self, n, h, f):
        r = exact_extremal(n, h, [f])
        assert r.value == brute_extremal(n, h, [f])
        assert is_free(r.witness, f)

    def test_mantel_and_zykov(self):
        for n in range(3, 8):
            assert exact_extremal(n, K2, [K3]).value == n * n // 4
        for n in range(4, 8):
            assert exact_extremal(n, K3, [K4]).value == turan_clique_count(n, 4, 3)

    def test_monotone_in_n(self):
        for h, f in [(K2, cycle_graph(4)), (path_graph(3), K3), (K3, complete_graph(5))]:
            values = [exact_extremal(n, h, [f]).value for n in range(2, 8)]
            assert values == sorted(values)

    def test_nothing_forbidden(self):
        assert exact_extremal(6, K3, []).value == 20

    def test_workers_agree(self):
        a = exact_extremal(7, path_graph(3), [cycle_graph(4)], workers=1)
        b = exact_extremal(7, path_graph(3), [cycle_graph(4)], workers=2)
        assert a.value == b.value and a.witness == b.witness

    def test_witness_is_deterministic(self):
        assert exact_extremal(6, K2, [K3]).witness == exact_extremal(6, K2, [K3]).witness

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            exact_extremal(11, K2, [K3])
        with pytest.raises(LimitExceededError):
            exact_extremal(6, K2, [K3], limit=5)

    def test_bad_forbidden(self):
        with pytest.raises(PreconditionError):
            exact_extremal(5, K2, [complete_graph(1)])


class TestGeneration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_free_class_counts_match_oracle(self, n):
        for f in (K3, cycle_graph(4), path_graph(4)):
            ours = free_graph_classes(n, [f])
            expected = count_classes(g for g in all_labelled_graphs(n) if not contains(g, f))
            assert len(ours) == expected
            assert all(is_free(g, f) for g in ours)

    def test_all_classes_without_forbidden(self):
        assert [len(free_graph_classes(n, [])) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


class TestHeuristic:
    def test_reaches_mantel(self):
        r = heuristic_lower(8, K2, [K3], seed=3)
        assert r.value == 16 and is_free(r.witness, K3)

    def test_nothing_forbidden_gives_complete(self):
        assert heuristic_lower(6, K3, [], seed=0).value == 20

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_below_exact(self, seed):
        h, f = cycle_graph(4), complete_bipartite(2, 3)
        r = heuristic_lower(7, h, [f], seed=seed, iterations=500)
        assert is_free(r.witness, f)
        assert r.value <= exact_extremal(7, h, [f]).value

    def test_below_exact_at_the_limit(self):
        # ex(10, C4, {K_{2,3}}) = 17, frozen from a full exhaustive run (about 4 minutes)
        h, f = cycle_graph(4), complete_bipartite(2, 3)
        r = heuristic_lower(10, h, [f], seed=0, iterations=400, restarts=2)
        assert is_free(r.witness, f) and r.value <= 17

    def test_same_seed_same_result(self):
        a = heuristic_lower(7, path_graph(3), [K3], seed=9, iterations=300)
        b = heuristic_lower(7, path_graph(3), [K3], seed=9, iterations=300)
        assert a == b


class TestRandomDeletion:
    def test_example(self):
        r = random_deletion_lower(RandomConstructionParams(60, K3, K4, 1.0, 1))
        assert is_free(r.witness, K4) and r.value >= 1

    def test_clamped_probability(self):
        params = RandomConstructionParams(12, K3, K4, 1e9, 0)
        assert params.p == 1.0
        r = random_deletion_lower(params)
        assert is_free(r.witness, K4)

    def test_errors(self):
        with pytest.raises(PreconditionError):
            RandomConstructionParams(10, K3, K3)
        with pytest.raises(PreconditionError):
            RandomConstructionParams(10, K3, K4, c=0)

    def test_coefficient(self):
        assert first_moment_coefficient(K3, K4) == 3 ** 9 + 1

    @given(st.integers(5, 25), st.integers(0, 1000))
    @settings(max_examples=15)
    def test_witness_always_free(self, n, seed):
        f = cycle_graph(4)
        r = random_deletion_lower(RandomConstructionParams(n, path_graph(3), f, 2.0, seed))
        assert is_free(r.witness, f)


class TestClosedForms:
    def test_exponents(self):
        assert exponent_lower(K3, K4) == 1
        assert exponent_lower(K2, K3) == Fraction(3, 2)
        assert exponent_lower(cycle_graph(4), complete_bipartite(2, 3)) == -2

    def test_subtraction(self):
        assert subtraction_bound(25, 5) == 20
        assert subtraction_bound(5, 25) == 0
        ex_k3 = exact_extremal(6, K2, [K3]).value
        ex_p3 = exact_extremal(6, K2, [path_graph(3)]).value
        assert (ex_k3, ex_p3) == (9, 3)
        assert subtraction_bound(ex_k3, ex_p3) <= exact_extremal(6, path_graph(3), [K3]).value

    def test_kk_solve_examples(self):
        assert kk_solve(4, 3) == 4
        assert kk_solve(10, 3) == 5
        assert math.isclose(kk_solve(7, 2), (1 + math.sqrt(57)) / 2, rel_tol=1e-12)

    def test_kk_shadow_examples(self):
        assert kk_shadow_bound(4, 3, 2) == 6
        assert all(math.isclose(kk_shadow_bound(m, 3, 3), m) for m in range(1, 30))
        assert shadow_bound(4, 3, 2).x == 4

    @given(st.integers(1, 10**6), st.integers(1, 6))
    def test_kk_residual(self, m, k):
        x = kk_solve(m, k)
        assert x >= k
        assert abs(real_binom(x, k) - m) <= KK_TOLERANCE * max(1, m)

    def test_kk_random_inputs(self):
        rng = random.Random(0)
        for _ in range(1000):
            m, k = rng.randint(1, 10**5), rng.randint(1, 5)
            assert abs(real_binom(kk_solve(m, k), k) - m) <= KK_TOLERANCE * max(1, m)

    def test_kk_clique_bound(self):
        assert kk_clique_bound(4, 2) == 4
        assert kk_clique_bound(9, 3) == 27
        with pytest.raises(PreconditionError):
            kk_clique_bound(4, 1)

    def test_kk_errors(self):
        with pytest.raises(PreconditionError):
            kk_solve(0, 3)
        with pytest.raises(PreconditionError):
            kk_shadow_bound(5, 3, 4)


class TestLedger:
    def test_append(self, tmp_path):
        path = tmp_path / "ledger.csv"
        append_ledger(path, exact_extremal(4, K2, [K3]))
        append_ledger(path, heuristic_lower(5, K2, [K3], seed=1, iterations=50))
        rows = list(csv.reader(path.open()))
        assert rows[0] == LEDGER_HEADER and len(rows) == 3
        assert rows[1][3] == "4" and rows[1][4] == "exact" and rows[1][6] == ""
        assert rows[2][6] == "1"
