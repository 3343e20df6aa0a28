import unittest
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

from simplicialcentrality.adjacency import weighted_adjacency_matrix
from simplicialcentrality.centrality import (
    all_level_betweenness,
    generalised_clustering_coefficient,
    generalised_clustering_coefficients,
    generalised_weighted_betweenness,
    is_level_connected,
    level_components,
    maximal_generalised_degree,
    maximal_generalised_degrees,
    normalize_gcc,
    score_table,
    shortest_path_length,
    walk_length,
)
from simplicialcentrality.common import ArgumentError, Measure
from simplicialcentrality.simplicial import (
    Graph,
    SimplicialComplex,
    clique_complex,
    parse_edge_list,
)

from .helpers import bridged_triangles, random_complexes, random_graph


def brute_degree(c, s):
    return sum(len(f) - 1 for f in c.facet_list if set(s) < set(f))


def brute_betweenness(c, k):
    """Enumerate every minimum-weight path between every pair by hand."""
    level = c.simplices(k)
    g = nx.Graph()
    g.add_nodes_from(level)
    for a, b in combinations(level, 2):
        union = set(a) | set(b)
        w = max((len(s) - 1 for s in c if union <= set(s)), default=0)
        if w:
            g.add_edge(a, b, weight=w)
    scores = dict.fromkeys(level, Fraction(0))
    for a, b in combinations(level, 2):
        if not nx.has_path(g, a, b):
            continue
        paths = list(nx.all_shortest_paths(g, a, b, weight="weight"))
        for path in paths:
            for v in path[1:-1]:
                scores[v] += Fraction(1, len(paths))
    return scores


class TestMaximalGeneralisedDegree(unittest.TestCase):
    def test_bridged_triangles_values(self):
        c = bridged_triangles()
        self.assertEqual(maximal_generalised_degree(c, c.simplex_of(4)), 3)
        self.assertEqual(maximal_generalised_degree(c, c.simplex_of(3)), 3)
        self.assertEqual(maximal_generalised_degree(c, c.simplex_of(1)), 2)
        self.assertEqual(maximal_generalised_degree(c, c.simplex_of(4, 5, 6)), 0)
        self.assertEqual(maximal_generalised_degree(c, c.simplex_of(3, 4)), 0)

    def test_batch_matches_single(self):
        for c in random_complexes(25):
            degrees = maximal_generalised_degrees(c)
            self.assertEqual(len(degrees), len(c))
            for s in c:
                self.assertEqual(degrees[s], brute_degree(c, s))
                self.assertEqual(degrees[s], maximal_generalised_degree(c, s))

    def test_facets_score_zero(self):
        c = bridged_triangles()
        degrees = maximal_generalised_degrees(c)
        for f in c.facet_list:
            self.assertEqual(degrees[f], 0)

    def test_unknown_simplex(self):
        with self.assertRaises(ArgumentError):
            maximal_generalised_degree(bridged_triangles(), (0, 5))

    def test_adding_a_facet_adds_its_dimension(self):
        for c in random_complexes(25, seed=17):
            faces_only = [s for s in c if not c.is_facet(s)]
            if not faces_only:
                continue
            # A face plus a fresh vertex is a new facet that swallows no old facet.
            new_vertex = len(c.labels)
            grown = SimplicialComplex.from_simplices(
                [*c.facet_list, (*faces_only[-1], new_vertex)]
            )
            facet = (*faces_only[-1], new_vertex)
            before = maximal_generalised_degrees(c)
            after = maximal_generalised_degrees(grown)
            for s in c:
                bonus = len(facet) - 1 if set(s) < set(facet) else 0
                self.assertEqual(after[s], before[s] + bonus)


class TestGeneralisedClusteringCoefficient(unittest.TestCase):
    def test_filled_triangle(self):
        c = clique_complex(parse_edge_list("1 2\n2 3\n1 3\n"))
        self.assertEqual(generalised_clustering_coefficient(c, c.simplex_of(1)), 1)

    def test_bridged_triangles_bridge_vertex(self):
        c = bridged_triangles()
        self.assertEqual(
            generalised_clustering_coefficient(c, c.simplex_of(4)), Fraction(1, 3)
        )
        self.assertEqual(generalised_clustering_coefficient(c, c.simplex_of(3, 4)), 0)

    def test_can_exceed_one(self):
        # In a tetrahedron each edge has five neighbours, all pairwise adjacent, but
        # its degree is only 3.
        c = clique_complex(Graph.from_networkx(nx.complete_graph(4)))
        edge = c.simplices(1)[0]
        self.assertEqual(generalised_clustering_coefficient(c, edge), Fraction(10, 3))

    def test_batch_matches_single(self):
        for c in random_complexes(25, seed=5):
            scores = generalised_clustering_coefficients(c)
            for s in c:
                self.assertEqual(scores[s], generalised_clustering_coefficient(c, s))

    def test_normalization(self):
        c = bridged_triangles()
        normalized = normalize_gcc(generalised_clustering_coefficients(c))
        self.assertEqual(normalized.measure, Measure.GCC_NORMALIZED)
        for dim, values in normalized.by_dimension().items():
            self.assertLessEqual(max(values.values()), 1)
            self.assertGreaterEqual(min(values.values()), 0)
        self.assertEqual(normalized[c.simplex_of(1)], 1)
        self.assertEqual(normalized[c.simplex_of(4)], Fraction(1, 3))

    def test_normalization_keeps_the_order(self):
        for c in random_complexes(25, seed=19):
            raw = generalised_clustering_coefficients(c)
            normalized = normalize_gcc(raw)
            for k in range(c.dimension + 1):
                for a, b in combinations(c.simplices(k), 2):
                    if raw[a] < raw[b]:
                        self.assertLess(normalized[a], normalized[b])
                    elif raw[a] == raw[b]:
                        self.assertEqual(normalized[a], normalized[b])
                    else:
                        self.assertGreater(normalized[a], normalized[b])


class TestWalks(unittest.TestCase):
    def setUp(self):
        self.c = bridged_triangles()

    def test_shortest_path(self):
        c = self.c
        self.assertEqual(shortest_path_length(c, 0, c.simplex_of(6), c.simplex_of(5)), 2)
        self.assertEqual(shortest_path_length(c, 0, c.simplex_of(1), c.simplex_of(6)), 5)
        self.assertEqual(shortest_path_length(c, 0, c.simplex_of(1), c.simplex_of(1)), 0)

    def test_unreachable(self):
        c = self.c
        a, b = c.simplices(2)
        self.assertIsNone(shortest_path_length(c, 2, a, b))

    def test_explicit_walk(self):
        c = self.c
        s = c.simplex_of
        walk = [
            s(6), s(4, 5, 6), s(4), s(3, 4), s(3), s(3, 4), s(4), s(4, 5, 6), s(5),
        ]
        self.assertEqual(walk_length(c, walk), 6)

    def test_invalid_walk(self):
        c = self.c
        s = c.simplex_of
        with self.assertRaises(ArgumentError):
            walk_length(c, [s(1), s(3, 4), s(4)])
        with self.assertRaises(ArgumentError):
            walk_length(c, [s(1), s(1, 2, 3)])

    def test_components(self):
        c = self.c
        self.assertTrue(is_level_connected(c, 0))
        self.assertEqual(len(level_components(c, 0)), 1)
        components = level_components(c, 2)
        self.assertEqual(len(components), 2)
        self.assertFalse(is_level_connected(c, 2))
        # The bridge edge [3,4] is adjacent to nothing.
        self.assertIn((c.simplex_of(3, 4),), level_components(c, 1).blocks)


class TestGeneralisedWeightedBetweenness(unittest.TestCase):
    def test_path_graph_middle_vertex(self):
        c = clique_complex(parse_edge_list("1 2\n2 3\n"))
        scores = generalised_weighted_betweenness(c, 0)
        self.assertEqual(scores[c.simplex_of(2)], 1)
        self.assertEqual(scores[c.simplex_of(1)], 0)

    def test_complete_graph_scores_zero(self):
        c = clique_complex(Graph.from_networkx(nx.complete_graph(5)))
        for k in range(c.dimension + 1):
            scores = generalised_weighted_betweenness(c, k)
            self.assertTrue(all(v == 0 for v in scores.scores.values()))

    def test_bridged_triangles_bridge(self):
        c = bridged_triangles()
        raw = generalised_weighted_betweenness(c, 0, normalized=False)
        self.assertEqual(raw[c.simplex_of(3)], 6)
        self.assertEqual(raw[c.simplex_of(4)], 6)
        self.assertEqual(raw[c.simplex_of(1)], 0)
        normalized = generalised_weighted_betweenness(c, 0)
        self.assertEqual(normalized[c.simplex_of(3)], Fraction(3, 5))

    def test_small_components_score_zero(self):
        c = clique_complex(parse_edge_list("1 2\nvertices: 3\n"))
        scores = generalised_weighted_betweenness(c, 0)
        self.assertEqual(set(scores.scores.values()), {0})

    def test_matches_path_enumeration(self):
        for c in random_complexes(25, seed=9):
            for k in range(c.dimension + 1):
                raw = generalised_weighted_betweenness(c, k, normalized=False)
                expected = brute_betweenness(c, k)
                for s, value in expected.items():
                    self.assertEqual(raw[s], value)

    def test_thread_count_does_not_change_scores(self):
        c = clique_complex(random_graph(30, 0.3, seed=1))
        single = all_level_betweenness(c, threads=1)
        pooled = all_level_betweenness(c, threads=4)
        self.assertEqual(single.scores, pooled.scores)


class TestScoreTable(unittest.TestCase):
    def test_rows_in_canonical_order(self):
        c = bridged_triangles()
        raw = generalised_clustering_coefficients(c)
        rows = score_table(c, raw, normalize_gcc(raw))
        self.assertEqual(len(rows), len(c))
        self.assertEqual(rows[0][:3], ("[1]", 0, "gcc"))
        self.assertEqual(rows[-1][0], "[4,5,6]")
        self.assertEqual(rows[3][3], Fraction(1, 3))


def enumerated_betweenness(g):
    """Normalized graph betweenness from every simple path between every pair."""
    scores = dict.fromkeys(g, 0.0)
    for component in nx.connected_components(g):
        n = len(component)
        if n <= 2:
            continue
        for u, v in combinations(sorted(component), 2):
            paths = list(nx.all_simple_paths(g, u, v))
            shortest = min(len(p) for p in paths)
            paths = [p for p in paths if len(p) == shortest]
            for path in paths:
                for w in path[1:-1]:
                    scores[w] += 1 / len(paths) / ((n - 1) * (n - 2) / 2)
    return scores


class TestOneDimensionalReduction(unittest.TestCase):
    """With every simplex of dimension at most one, the measures reduce to their
    graph counterparts."""

    seeds = range(50)

    def test_adjacency_is_the_graph_adjacency(self):
        for seed in self.seeds:
            g = random_graph(20, 0.2, seed)
            level = weighted_adjacency_matrix(clique_complex(g, max_dim=1), 0)
            expected = nx.to_numpy_array(g.to_networkx(), nodelist=range(g.vertex_count))
            np.testing.assert_array_equal(level.to_dense(), expected)

    def test_degree_is_the_graph_degree(self):
        for seed in self.seeds:
            g = random_graph(20, 0.2, seed)
            degrees = maximal_generalised_degrees(clique_complex(g, max_dim=1))
            for v, d in g.to_networkx().degree:
                self.assertEqual(degrees[(v,)], d)

    def test_gcc_is_the_clustering_coefficient(self):
        for seed in self.seeds:
            g = random_graph(20, 0.2, seed)
            scores = generalised_clustering_coefficients(clique_complex(g, max_dim=1))
            for v, value in nx.clustering(g.to_networkx()).items():
                self.assertAlmostEqual(float(scores[(v,)]), value, delta=1e-9)

    def test_betweenness_matches_networkx(self):
        for seed in self.seeds:
            g = random_graph(20, 0.2, seed)
            scores = generalised_weighted_betweenness(clique_complex(g, max_dim=1), 0, threads=1)
            nxg = g.to_networkx()
            for component in nx.connected_components(nxg):
                expected = nx.betweenness_centrality(nxg.subgraph(component))
                for v, value in expected.items():
                    self.assertAlmostEqual(float(scores[(v,)]), value, delta=1e-9)

    def test_betweenness_matches_simple_path_enumeration(self):
        for seed in self.seeds:
            g = random_graph(10, 0.3, seed)
            scores = generalised_weighted_betweenness(clique_complex(g, max_dim=1), 0)
            for v, value in enumerated_betweenness(g.to_networkx()).items():
                self.assertAlmostEqual(float(scores[(v,)]), value, delta=1e-9)
