import pickle

import networkx as nx
import pytest
from hypothesis import given

from genturan.errors import PreconditionError
from genturan.graph import Graph, Hypergraph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from genturan.io import (
    format_hypergraph,
    from_graph6,
    parse_hypergraph,
    read_graph_arg,
    to_dot,
    to_graph6,
)
from oracles import to_nx
from strategies import graphs, hypergraphs


class TestGraph:
    def test_rejects_loops_and_asymmetry(self):
        with pytest.raises(PreconditionError):
            Graph(2, [0b01, 0])
        with pytest.raises(PreconditionError):
            Graph(2, [0b10, 0])
        with pytest.raises(PreconditionError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(PreconditionError):
            Graph.from_edges(2, [(0, 2)])
        with pytest.raises(PreconditionError):
            Graph(-1)

    def test_immutable(self):
        g = complete_graph(3)
        with pytest.raises(AttributeError):
            g.n = 4

    def test_basic_queries(self):
        g = cycle_graph(5)
        assert g.edge_count == 5
        assert g.edges()[0] == (0, 1)
        assert g.degrees() == [2] * 5
        assert g.has_edge(4, 0) and not g.has_edge(0, 2)
        assert g.distances_from(0) == [0, 1, 2, 2, 1]
        assert not g.is_forest() and path_graph(5).is_forest()

    def test_edits_return_new_graphs(self):
        g = path_graph(3)
        h = g.add_edge(0, 2)
        assert g.edge_count == 2 and h.edge_count == 3
        assert h.remove_edge(0, 2) == g
        assert g.add_vertex(0b001).degree(3) == 1

    def test_components_and_union(self):
        g = complete_graph(3).disjoint_union(path_graph(2)).add_vertex()
        assert sorted(map(len, g.components())) == [1, 2, 3]
        assert not g.is_connected()

    def test_relabel_and_complement(self):
        g = path_graph(3)
        h = g.relabel([2, 0, 1])
        assert h.has_edge(2, 0) and h.has_edge(0, 1)
        assert complete_graph(4).complement() == empty_graph(4)

    def test_named_graphs(self):
        assert star_graph(4).degrees() == [4, 1, 1, 1, 1]
        with pytest.raises(PreconditionError):
            cycle_graph(2)


class TestHypergraph:
    def test_normalises_order(self):
        a = Hypergraph(4, [(2, 1, 0), (0, 3)])
        b = Hypergraph(4, [(0, 3), (0, 1, 2)])
        assert a == b and a.edges == ((0, 3), (0, 1, 2))

    def test_validation(self):
        with pytest.raises(PreconditionError):
            Hypergraph(3, [(0,)])
        with pytest.raises(PreconditionError):
            Hypergraph(3, [(0, 3)])
        with pytest.raises(PreconditionError):
            Hypergraph(3, [(0, 1), (1, 0)])

    def test_shadow_and_uniform(self):
        h = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
        assert h.is_uniform(3)
        assert h.shadow(2) == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}


class TestGraph6:
    @pytest.mark.parametrize("n", [0, 1, 2, 5, 62, 63, 64, 200])
    def test_matches_networkx_bytes(self, n):
        g = Graph.from_edges(n, [(i, (i * 7 + 3) % n) for i in range(n) if (i * 7 + 3) % n != i])
        ours = to_graph6(g)
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == ref
        assert from_graph6(ref) == g

    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g
        assert from_graph6(to_graph6(g, header=True)) == g

    @given(graphs(max_n=10))
    def test_decodes_networkx_output(self, g):
        assert from_graph6(nx.to_graph6_bytes(to_nx(g), header=False)) == g

    @pytest.mark.parametrize("bad", ["", "B", "Bxx", "C\x7f", "A@", "~??"])
    def test_malformed(self, bad):
        with pytest.raises(PreconditionError):
            from_graph6(bad)

    def test_file_argument(self, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text(to_graph6(cycle_graph(5)) + "\n")
        assert read_graph_arg(f"@{p}") == cycle_graph(5)


class TestTextFormats:
    @given(hypergraphs())
    def test_hypergraph_round_trip(self, h):
        assert parse_hypergraph(format_hypergraph(h)) == h

    def test_hypergraph_parse_errors(self):
        with pytest.raises(PreconditionError):
            parse_hypergraph("3\n0 1\n")
        with pytest.raises(PreconditionError):
            parse_hypergraph("3 2\n0 1\n")
        with pytest.raises(PreconditionError):
            parse_hypergraph("3 1\n0 x\n")

    def test_dot(self):
        text = to_dot(path_graph(3), "P")
        assert text.startswith("graph P {") and "0 -- 1;" in text and "1 -- 2;" in text


class TestPickle:
    @given(graphs(max_n=10))
    def test_graph(self, g):
        assert pickle.loads(pickle.dumps(g)) == g

    @given(hypergraphs())
    def test_hypergraph(self, h):
        assert pickle.loads(pickle.dumps(h)) == h
