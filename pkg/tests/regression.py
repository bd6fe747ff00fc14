"""Fixed (k, F) regression list for the linearity classifier, with expected verdicts."""

from genturan.constructions import c_star
from genturan.graph import Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph, path_graph, star_graph


def c5_with_pendants(*at):
    g = cycle_graph(5)
    for v in at:
        g = g.add_vertex(1 << v)
    return g


def spider():
    # K_{1,3} with every edge subdivided once
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def copies(g, m):
    out = g
    for _ in range(m - 1):
        out = out.disjoint_union(g)
    return out


# legs of 1, 4 and 3 vertices: the longest path has 8 vertices, yet the tree lies
# in every R_7^r-graph for r >= 2 and in no C_7^{*r}
LONG_SPIDER = Graph.from_edges(9, [(0, 6), (1, 7), (2, 8), (3, 4), (3, 7), (4, 8), (5, 6), (5, 8)])


REGRESSION = [
    ("K14-k6", 6, star_graph(4), "linear"),
    ("P7-k6", 6, path_graph(7), "linear"),
    ("2C6-k6", 6, copies(cycle_graph(6), 2), "quadratic"),
    ("C4-k4", 4, cycle_graph(4), "linear"),
    ("C5-pendants-02-k5", 5, c5_with_pendants(0, 2), "linear"),
    ("C5-pendants-01-k5", 5, c5_with_pendants(0, 1), "quadratic"),
    ("P8-k6", 6, path_graph(8), "quadratic"),
    ("3K13-k8", 8, copies(star_graph(3), 3), "quadratic"),
    ("C4-k5", 5, cycle_graph(4), "quadratic"),
    ("K23-k4", 4, complete_bipartite(2, 3), "quadratic"),
    ("K4-k6", 6, complete_graph(4), "quadratic"),
    ("C5-k4", 4, cycle_graph(5), "quadratic"),
    ("2P4-k6", 6, copies(path_graph(4), 2), "quadratic"),
    ("2K13-k6", 6, copies(star_graph(3), 2), "linear"),
    ("C6-k6", 6, cycle_graph(6), "linear"),
    ("P7-k7", 7, path_graph(7), "linear"),
    ("K13-k5", 5, star_graph(3), "linear"),
    ("C7star2-k7", 7, c_star(7, 2), "linear"),
    ("K3-k6", 6, complete_graph(3), "quadratic"),
    ("spider-k8", 8, spider(), "quadratic"),
    ("P4K1-k6", 6, path_graph(4).disjoint_union(empty_graph(1)), "linear"),
    ("K4-k4", 4, complete_graph(4), "quadratic"),
    ("C6-k8", 8, cycle_graph(6), "quadratic"),
    ("K15-k5", 5, star_graph(5), "linear"),
    ("long-spider-k7", 7, LONG_SPIDER, "linear"),
]
