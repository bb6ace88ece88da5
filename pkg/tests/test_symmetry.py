"""Tests for the autoparatopism census and class-count estimates"""

import os
import sys
from fractions import Fraction
from pathlib import Path
import unittest
from math import factorial

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.exceptions import BudgetExceeded, MissingConstant
from src.latin.autotopism import autoparatopism_group_order
from src.latin.enumeration import enumerate_reduced
from src.symmetry.census import (
    SymmetryCensus,
    bound_value,
    class_count_estimates,
    spot_check_invariance,
    symmetry_census,
)

SEED = 20240601
SLOW = os.getenv("LATIN_SLOW_TESTS")


class TestSymmetryCensus(unittest.TestCase):
    """Test cases for symmetry_census"""

    def test_order_one(self):
        """Test that the 1x1 square has a non-trivial autoparatopism"""
        census = symmetry_census(1)
        self.assertEqual(census.proportion, 1)
        self.assertEqual(census.to_line(), "SYM 1 1 1 1/1 -")

    def test_order_four(self):
        """Test that every reduced square of order 4 is symmetric"""
        census = symmetry_census(4)
        self.assertEqual((census.total_reduced, census.nontrivial_reduced), (4, 4))

    def test_order_five(self):
        """Test the census against full group orders"""
        squares = list(enumerate_reduced(5, 5))
        expected = sum(1 for square in squares if autoparatopism_group_order(square) > 1)
        census = symmetry_census(5)
        self.assertEqual(census.total_reduced, 56)
        self.assertEqual(census.nontrivial_reduced, expected)
        self.assertEqual(symmetry_census(5, workers=2).nontrivial_reduced, expected)

    def test_line_format(self):
        """Test the SYM line with a bound"""
        census = SymmetryCensus(2, 1, 1)
        self.assertEqual(census.to_line(), "SYM 2 1 1 1/1 384/1")

    def test_budget(self):
        """Test the order budget"""
        with self.assertRaises(BudgetExceeded):
            symmetry_census(7)

    def test_inner_budgets(self):
        """Test that the enumeration and search budgets are applied"""
        with self.assertRaises(BudgetExceeded):
            symmetry_census(4, squares_max_n=3)
        with self.assertRaises(BudgetExceeded):
            symmetry_census(4, autoparatopism_max_n=3)
        with self.assertRaises(BudgetExceeded):
            spot_check_invariance(list(enumerate_reduced(4, 4)), 1, SEED, max_n=3)
        self.assertEqual(symmetry_census(4, squares_max_n=4, autoparatopism_max_n=4).nontrivial_reduced, 4)

    def test_spot_checks(self):
        """Test verdict invariance under random paratopisms"""
        squares = list(enumerate_reduced(5, 5))
        self.assertEqual(spot_check_invariance(squares, 25, SEED), 0)

    @unittest.skipUnless(SLOW, "set LATIN_SLOW_TESTS=1 to run")
    def test_proportion_decreases(self):
        """Test that the proportion does not increase from n = 4 to n = 6"""
        proportions = [symmetry_census(n, workers=2).proportion for n in (4, 5, 6)]
        self.assertEqual(proportions, sorted(proportions, reverse=True))


class TestBoundsAndEstimates(unittest.TestCase):
    """Test cases for bound_value and class_count_estimates"""

    def test_bound_order_two(self):
        """Test 6 * 2!^3 * 2^3 / (2!^4 * 2^-4)"""
        self.assertEqual(bound_value(2), Fraction(384))

    def test_bound_order_six(self):
        """Test the exponent ceil(5 * 36 / 8) = 23"""
        f = factorial(6)
        self.assertEqual(bound_value(6), Fraction(6 * f ** 3 * 6 ** 23 * 6 ** 36, f ** 12))
        with self.assertRaises(ValueError):
            bound_value(1)

    def test_bound_sweep(self):
        """Test that the bound exceeds 1 and increases for 2 <= n <= 50"""
        values = [bound_value(n) for n in range(2, 51)]
        self.assertTrue(all(value > 1 for value in values))
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))

    def test_bound_eventually_below_one(self):
        """Test that the bound falls below 1 for large n"""
        self.assertLess(bound_value(300), 1)

    def test_estimates(self):
        """Test n = 1 and n = 7"""
        self.assertEqual(class_count_estimates(1), (1, 1, Fraction(1, 6)))
        latin_squares = factorial(7) * factorial(6) * 16942080
        estimates = class_count_estimates(7)
        self.assertEqual(estimates.main, Fraction(latin_squares, 6 * factorial(7) ** 3))
        self.assertEqual(estimates.isotopy, Fraction(latin_squares, factorial(7) ** 3))

    def test_estimates_need_constant(self):
        """Test orders beyond the published table"""
        with self.assertRaises(MissingConstant):
            class_count_estimates(12)
        self.assertEqual(class_count_estimates(12, 1).isomorphism, Fraction(1, factorial(12)))


if __name__ == '__main__':
    unittest.main()
