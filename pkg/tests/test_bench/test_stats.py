import unittest

import numpy as np

from beliefplan.bench import chi_square_uniform, two_proportion_greater, welch_greater


class TestComparisons(unittest.TestCase):
    def test_welch(self):
        rng = np.random.default_rng(0)
        better = rng.normal(1.0, 1.0, 200)
        worse = rng.normal(0.0, 1.0, 200)
        self.assertLess(welch_greater(better, worse), 0.001)
        self.assertGreater(welch_greater(worse, better), 0.999)

    def test_proportions(self):
        self.assertLess(two_proportion_greater(90, 100, 50, 100), 0.001)
        self.assertAlmostEqual(two_proportion_greater(50, 100, 50, 100), 0.5)

    def test_proportions_without_variance(self):
        self.assertEqual(two_proportion_greater(0, 10, 0, 10), 1.0)
        self.assertEqual(two_proportion_greater(10, 10, 10, 10), 1.0)

    def test_chi_square(self):
        self.assertGreater(chi_square_uniform(np.linspace(0.0, 1.0, 400), 0.0, 1.0), 0.99)
        self.assertLess(chi_square_uniform(np.full(400, 0.1), 0.0, 1.0), 0.001)
