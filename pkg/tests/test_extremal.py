"""Tests for the extremal m(B) census"""

import os
import sys
from pathlib import Path
import unittest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.census.extremal import extremal_m
from src.census.formulas import CensusRunner
from src.exceptions import BudgetExceeded, ShapeInvalid
from src.graphs.canonical import decode_key
from src.number_theory.constants import PublishedConstants

SLOW = os.getenv("LATIN_SLOW_TESTS")


class TestExtremalM(unittest.TestCase):
    """Test cases for extremal_m"""

    def setUp(self):
        """Set up test fixtures"""
        self.constants = PublishedConstants()
        self.runner = CensusRunner()

    def assertMatchesPublished(self, k, n):
        result = extremal_m(k, n, self.runner)
        published = self.constants.extremal(k, n)
        self.assertEqual(result.min_m, published.min_m)
        self.assertEqual(result.min_count, published.min_count)
        self.assertEqual(result.max_m, published.max_m)
        self.assertTrue(result.max_unique)
        self.assertEqual(result.reduced_count, self.constants.reduced_rectangles(k, n))
        return result

    def test_order_five(self):
        """Test (3,5): least 4 once, largest 6"""
        result = self.assertMatchesPublished(3, 5)
        self.assertEqual((result.min_m, result.min_count, result.max_m), (4, 1, 6))

    def test_small_orders(self):
        """Test every published row with n <= 6"""
        for n in range(4, 7):
            for k in range(2, n - 1):
                with self.subTest(k=k, n=n):
                    self.assertMatchesPublished(k, n)

    def test_order_six_degree_four(self):
        """Test (4,6): least 168 once, largest 224"""
        result = self.assertMatchesPublished(4, 6)
        self.assertEqual((result.min_m, result.max_m), (168, 224))

    def test_witnesses_and_line(self):
        """Test witness keys and the CENSUS line"""
        result = extremal_m(3, 6, self.runner)
        self.assertEqual(len(result.min_witnesses), result.min_count)
        self.assertEqual(len(result.max_witnesses), result.max_count)
        for key in result.min_witnesses + result.max_witnesses:
            self.assertEqual(len(decode_key(key)), 6)
        self.assertEqual(
            result.to_line(),
            f"CENSUS 6 3 1064 {result.class_count} 8 4 24",
        )
        self.assertEqual(result.to_dict()['min_witnesses'], [key.hex() for key in result.min_witnesses])
        self.assertTrue(all(count <= result.max_matchings for count in result.max_m_matchings))

    def test_rejects_outer_degrees(self):
        """Test that k outside 2..n-2 is refused"""
        with self.assertRaises(ShapeInvalid):
            extremal_m(1, 6)
        with self.assertRaises(ShapeInvalid):
            extremal_m(5, 6)

    def test_matchings_budget_from_runner(self):
        """Test that the runner's matchings_max_n reaches the matching counts"""
        runner = CensusRunner(budgets={'matchings_max_n': 4})
        self.assertEqual(runner.matchings_max_n, 4)
        with self.assertRaises(BudgetExceeded):
            extremal_m(2, 5, runner)
        self.assertEqual(extremal_m(2, 4, runner).max_m, 2)

    @unittest.skipUnless(SLOW, "set LATIN_SLOW_TESTS=1 to run")
    def test_order_seven(self):
        """Test every published row with n = 7"""
        result = self.assertMatchesPublished(3, 7)
        self.assertEqual((result.min_m, result.min_count, result.max_m), (8, 3, 48))
        for k in (2, 4, 5):
            self.assertMatchesPublished(k, 7)


if __name__ == '__main__':
    unittest.main()
