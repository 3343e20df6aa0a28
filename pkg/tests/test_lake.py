"""
Checks against the Lake Tanganyika food web. The edge list is not distributed with
the package; drop it at ``tests/data/lake_edges.txt`` (or point
``SIMPLICIAL_LAKE_EDGES`` at it) to run these.
"""

import unittest
from fractions import Fraction
from pathlib import Path

import pytest
from django.conf import settings

from simplicialcentrality.centrality import (
    all_level_betweenness,
    generalised_clustering_coefficients,
    maximal_generalised_degrees,
    normalize_gcc,
)
from simplicialcentrality.common import Measure
from simplicialcentrality.filtration import run_filtration
from simplicialcentrality.homology import betti_numbers
from simplicialcentrality.simplicial import clique_complex, read_edge_list

from .helpers import random_graph


# The full complex has Euler characteristic 20 - 51 + 24 - 5 = -12, so every
# filtration ends on the same Betti vector.
FULL_BETTI = [1, 13, 0]

DEGREE_ROWS = {
    25: [1, 0, 0],
    20: [1, 0, 0],
    15: [2, 0, 0],
    10: [5, 0, 0],
    5: [7, 0, 0],
    2: [8, 15, 5],
    0: FULL_BETTI,
}
BETWEENNESS_ROWS = {
    "0.35": [1, 0, 0],
    "0.30": [2, 0, 0],
    "0.15": [3, 0, 0],
    "0.05": [7, 0, 0],
    "0.02": [9, 1, 0],
    "0": FULL_BETTI,
}
GCC_ROWS = {
    "1": [1, 14, 5],
    "0.66": [2, 14, 5],
    "0.30": [1, 6, 5],
    "0.16": [1, 7, 5],
    "0.09": [1, 15, 6],
    "0": FULL_BETTI,
}


class TestLakeNetwork(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        path = Path(getattr(settings, "SIMPLICIAL_LAKE_EDGES", ""))
        cls.complex = clique_complex(read_edge_list(path)) if path.is_file() else None

    def setUp(self):
        if self.complex is None:
            self.skipTest("SKIPPED: Lake Tanganyika edge list not available")

    def assertBettiRows(self, measure, rows):
        report = run_filtration(self.complex, measure, thresholds=",".join(map(str, rows)))
        betti = {step.threshold: list(step.betti) for step in report.steps}
        self.assertEqual(len(betti), len(rows))
        for threshold, expected in rows.items():
            with self.subTest(measure=measure.value, threshold=threshold):
                self.assertEqual(betti[Fraction(threshold)], expected)

    def test_shape(self):
        self.assertEqual(self.complex.f_vector, (20, 51, 24, 5))

    def test_degrees(self):
        c = self.complex
        degrees = maximal_generalised_degrees(c)
        expected = {1: 2, 2: 12, 3: 4, 4: 3, 5: 2, 18: 15, 19: 25}
        for label, degree in expected.items():
            with self.subTest(vertex=label):
                self.assertEqual(degrees[c.simplex_of(label)], degree)

    def test_gcc(self):
        c = self.complex
        raw = generalised_clustering_coefficients(c)
        edge = c.simplex_of(11, 18)
        self.assertAlmostEqual(float(raw[edge]), 3.33, places=2)
        self.assertEqual(normalize_gcc(raw)[edge], Fraction(1))

    def test_betweenness(self):
        c = self.complex
        scores = all_level_betweenness(c)
        self.assertEqual(scores.argmax(2), c.simplex_of(10, 18, 19))
        self.assertAlmostEqual(float(scores[c.simplex_of(10, 18, 19)]), 0.35, places=2)

    def test_full_complex_betti(self):
        self.assertEqual(list(betti_numbers(self.complex, max_dim=2)), FULL_BETTI)

    def test_degree_filtration(self):
        self.assertBettiRows(Measure.DEGREE, DEGREE_ROWS)

    def test_betweenness_filtration(self):
        self.assertBettiRows(Measure.BETWEENNESS_NORMALIZED, BETWEENNESS_ROWS)

    def test_gcc_filtration(self):
        self.assertBettiRows(Measure.GCC_NORMALIZED, GCC_ROWS)


@pytest.mark.slow
class TestLargerRandomGraph(unittest.TestCase):
    def test_pipeline_on_two_hundred_vertices(self):
        c = clique_complex(random_graph(200, 0.1, seed=2024), max_dim=3)
        self.assertLessEqual(c.dimension, 3)
        for measure in (Measure.DEGREE, Measure.GCC_NORMALIZED, Measure.BETWEENNESS_NORMALIZED):
            report = run_filtration(c, measure, thresholds="auto")
            self.assertEqual(report.steps[-1].subcomplex, c)
