"""Tests for perfect matchings of bipartite graphs"""

import random
import sys
from pathlib import Path
import unittest
from itertools import permutations

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.exceptions import FactorNotInGraph, NotAnEdge
from src.graphs.bipartite_graph import BipartiteGraph, complement
from src.graphs.matchings import OneFactor, count_perfect_matchings, one_factors_through, remove_factor

SEED = 20240601
EIGHT_CYCLE = BipartiteGraph(4, (0b0011, 0b0110, 0b1100, 0b1001), 2)


def brute_force_matchings(graph):
    return sum(
        1 for p in permutations(range(graph.n))
        if all(graph.has_edge(i, p[i]) for i in range(graph.n))
    )


class TestCountPerfectMatchings(unittest.TestCase):
    """Test cases for count_perfect_matchings"""

    def test_known_values(self):
        """Test K_{3,3}, the 8-cycle and K_{4,4} minus a perfect matching"""
        self.assertEqual(count_perfect_matchings(BipartiteGraph.complete(3)), 6)
        self.assertEqual(count_perfect_matchings(EIGHT_CYCLE), 2)
        self.assertEqual(count_perfect_matchings(complement(BipartiteGraph.perfect_matching(4))), 9)

    def test_empty(self):
        """Test that a graph with an isolated vertex has no matching"""
        self.assertEqual(count_perfect_matchings(BipartiteGraph.empty(3)), 0)

    def test_random_graphs(self):
        """Test random graphs against a permutation count"""
        rng = random.Random(SEED)
        for _ in range(30):
            n = rng.randint(1, 6)
            rows = [rng.getrandbits(n) for _ in range(n)]
            graph = BipartiteGraph.from_rows(n, rows)
            self.assertEqual(count_perfect_matchings(graph), brute_force_matchings(graph))


class TestOneFactorsThrough(unittest.TestCase):
    """Test cases for one_factors_through"""

    def test_matching(self):
        """Test that a perfect matching has one factor through any edge"""
        graph = BipartiteGraph.perfect_matching(4)
        factors = list(one_factors_through(graph, (2, 2)))
        self.assertEqual(factors, [OneFactor((0, 1, 2, 3))])

    def test_complete(self):
        """Test the (n-1)! factors of K_{n,n} through an edge"""
        factors = list(one_factors_through(BipartiteGraph.complete(3), (0, 0)))
        self.assertEqual(len(factors), 2)
        self.assertEqual(len(list(one_factors_through(BipartiteGraph.complete(5), (3, 1)))), 24)

    def test_cycle(self):
        """Test that every edge of the 8-cycle lies in exactly one factor"""
        for edge in EIGHT_CYCLE.edges():
            self.assertEqual(len(list(one_factors_through(EIGHT_CYCLE, edge))), 1)

    def test_factors_contain_edge_and_are_distinct(self):
        """Test containment, validity and uniqueness"""
        graph = complement(BipartiteGraph.perfect_matching(5))
        factors = list(one_factors_through(graph, (0, 1)))
        self.assertEqual(len(set(factors)), len(factors))
        for factor in factors:
            self.assertEqual(factor.matching[0], 1)
            self.assertEqual(sorted(factor.matching), list(range(5)))
            self.assertTrue(all(graph.has_edge(i, j) for i, j in factor.edges()))

    def test_not_an_edge(self):
        """Test that a missing edge is rejected"""
        with self.assertRaises(NotAnEdge):
            list(one_factors_through(BipartiteGraph.perfect_matching(3), (0, 1)))


class TestRemoveFactor(unittest.TestCase):
    """Test cases for remove_factor"""

    def test_matching_minus_itself(self):
        """Test that removing the only factor leaves the empty graph"""
        graph = BipartiteGraph.perfect_matching(3)
        self.assertEqual(remove_factor(graph, OneFactor((0, 1, 2))), BipartiteGraph.empty(3))

    def test_two_by_two(self):
        """Test that K_{2,2} minus one factor is the other"""
        complete = BipartiteGraph.complete(2)
        self.assertEqual(remove_factor(complete, OneFactor((0, 1))).rows, (0b10, 0b01))
        self.assertEqual(remove_factor(complete, OneFactor((1, 0))).rows, (0b01, 0b10))

    def test_six_cycle(self):
        """Test that K_{3,3} minus the identity factor is a 6-cycle"""
        rest = remove_factor(BipartiteGraph.complete(3), OneFactor((0, 1, 2)))
        self.assertEqual(rest.k, 2)
        self.assertEqual(rest.component_count(), 1)

    def test_factor_not_in_graph(self):
        """Test that a matching with a missing edge is rejected"""
        with self.assertRaises(FactorNotInGraph):
            remove_factor(EIGHT_CYCLE, OneFactor((0, 2, 3, 1)))


if __name__ == '__main__':
    unittest.main()
