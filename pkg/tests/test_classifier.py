import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genturan.classifier import (
    GROWTH_EXPONENT,
    LINEAR,
    QUADRATIC,
    VERDICT_HEADER,
    c_of,
    classify_linearity,
    forest_properties,
    is_fkr_forest,
)
from genturan.constructions import c_double_star, c_star, r_graph
from genturan.core import is_free
from genturan.counting import count_cycles
from genturan.embed import find_embedding
from genturan.errors import PreconditionError
from genturan.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from oracles import longest_path_vertices
from regression import LONG_SPIDER, REGRESSION, copies, spider
from strategies import graphs


class TestForestStructure:
    def test_c_of_examples(self):
        assert c_of(path_graph(3).disjoint_union(path_graph(5))) == 8
        assert c_of(star_graph(3)) == 3
        assert c_of(path_graph(4).disjoint_union(empty_graph(1))) == 4

    @given(graphs(max_n=8))
    def test_c_of_matches_oracle(self, g):
        expected = sum(longest_path_vertices(g, comp) for comp in g.components() if len(comp) > 1)
        assert c_of(g) == expected

    def test_spider_fails_item_three(self):
        props = forest_properties(spider(), 8).properties
        assert props[2] is False

    @pytest.mark.parametrize("k", [6, 7, 8, 9])
    def test_paths_satisfy_everything(self, k):
        assert forest_properties(path_graph(k), k).all_hold

    def test_three_stars(self):
        prof = forest_properties(copies(star_graph(3), 3), 8)
        assert prof.c_value == 9 and prof.properties[5]

    def test_longest_path_bound(self):
        prof = forest_properties(path_graph(8), 7)
        assert prof.properties[4] is False
        assert forest_properties(path_graph(7), 7).properties[4]

    @pytest.mark.xfail(strict=True, reason="item 5 is not necessary once r >= 2")
    def test_linear_forests_satisfy_all_items(self):
        assert forest_properties(LONG_SPIDER, 7).all_hold

    def test_errors(self):
        with pytest.raises(PreconditionError):
            forest_properties(cycle_graph(6), 7)
        with pytest.raises(PreconditionError):
            forest_properties(path_graph(4), 5)


class TestFkr:
    def test_examples(self):
        ok, embs = is_fkr_forest(7, 3, path_graph(7))
        assert ok and embs
        hosts = {p: r_graph(7, 3, *p) for p, _ in embs}
        assert all(find_embedding(path_graph(7), hosts[p]) is not None for p, _ in embs)
        assert is_fkr_forest(7, 3, cycle_graph(7)) == (False, [])

    def test_path_lengths(self):
        # with r >= 2 every R_k^r-graph has a path on k+1 vertices but none on k+2
        for k in (6, 7):
            assert not is_fkr_forest(k, 1, path_graph(k + 1))[0]
            assert is_fkr_forest(k, 3, path_graph(k + 1))[0]
            assert not is_fkr_forest(k, 3, path_graph(k + 2))[0]

    def test_longest_path_in_r_graph(self):
        g = r_graph(7, 3, 2, 0, 2, 3)
        assert longest_path_vertices(g, list(range(g.n))) == 8
        assert longest_path_vertices(r_graph(7, 1, 2, 0, 2, 3), list(range(7))) == 7

    def test_long_spider(self):
        assert is_fkr_forest(7, 2, LONG_SPIDER)[0]
        assert find_embedding(LONG_SPIDER, c_star(7, LONG_SPIDER.n)) is None
        assert forest_properties(LONG_SPIDER, 7).properties[4] is False
        v = classify_linearity(7, LONG_SPIDER)
        assert v.linear and v.host == "fkr-forest" and v.verify()

    def test_errors(self):
        with pytest.raises(PreconditionError):
            is_fkr_forest(5, 3, path_graph(4))
        with pytest.raises(PreconditionError):
            is_fkr_forest(6, 0, path_graph(4))


class TestClassify:
    def test_examples(self):
        v = classify_linearity(6, star_graph(4))
        assert v.verdict == LINEAR and v.host == "c_star" and v.verify()
        v = classify_linearity(6, copies(cycle_graph(6), 2))
        assert v.verdict == QUADRATIC and is_free(r_graph(6, 2, 2, 0, 2, 2), v.pattern)
        v = classify_linearity(6, path_graph(7))
        assert v.linear and v.host == "c_star" and v.r == 1
        v = classify_linearity(4, cycle_graph(4))
        assert v.linear and v.host == "c_double_star"

    @pytest.mark.parametrize("name,k,f,expected", REGRESSION, ids=[r[0] for r in REGRESSION])
    def test_regression(self, name, k, f, expected):
        v = classify_linearity(k, f)
        assert v.verdict == expected
        assert v.verify()
        if v.linear and v.host == "fkr-forest":
            # every item except the longest-path bound is a necessary condition
            props = forest_properties(f, k).properties
            assert all(ok for i, ok in enumerate(props) if i != 4)
        if not v.linear:
            (n1, c1), (n2, c2) = v.growth
            assert c2 / c1 >= (n2 / n1) ** GROWTH_EXPONENT
            assert count_cycles(v.member, k).value > 0

    @pytest.mark.parametrize("name,k,f,expected", REGRESSION, ids=[r[0] for r in REGRESSION])
    def test_monotone_at_next_r(self, name, k, f, expected):
        v = classify_linearity(k, f)
        build = c_double_star if k in (4, 5) else c_star
        host_contains = find_embedding(f, build(k, v.r0 + 1)) is not None
        if v.linear and v.host != "fkr-forest":
            assert host_contains
        if not v.linear:
            assert not host_contains

    @pytest.mark.parametrize("k", [6, 7, 8])
    @pytest.mark.parametrize("r", [0, 1, 2, 3])
    def test_self_containment(self, k, r):
        v = classify_linearity(k, c_star(k, r))
        assert v.linear and v.r <= r and v.verify()

    def test_forbidding_the_cycle_itself(self):
        assert classify_linearity(7, cycle_graph(7)).linear

    def test_csv_and_report(self):
        v = classify_linearity(6, star_graph(4))
        row = v.csv_row()
        assert len(row) == len(VERDICT_HEADER) and row[2] == "linear" and row[4] == "c_star"
        text = classify_linearity(5, cycle_graph(4)).report()
        assert "family=furedi" in text and "member=" in text

    def test_errors(self):
        with pytest.raises(PreconditionError):
            classify_linearity(3, path_graph(3))
        with pytest.raises(PreconditionError):
            classify_linearity(5, Graph(0))

    @settings(max_examples=15)
    @given(graphs(min_n=2, max_n=6), st.integers(4, 7))
    def test_certificates_always_verify(self, f, k):
        v = classify_linearity(k, f)
        assert v.verify()
