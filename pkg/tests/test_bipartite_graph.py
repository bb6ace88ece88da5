"""Tests for bipartite graph construction, complement and BGF text format"""

import sys
from pathlib import Path
import unittest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.exceptions import ShapeInvalid
from src.graphs.bipartite_graph import BipartiteGraph, complement, format_graph, parse_graph

SIX_CYCLE = BipartiteGraph(3, (0b011, 0b110, 0b101), 2)


class TestBipartiteGraph(unittest.TestCase):
    """Test cases for BipartiteGraph"""

    def test_constructors(self):
        """Test empty, complete and perfect matching graphs"""
        self.assertEqual(BipartiteGraph.empty(3).edge_count, 0)
        self.assertEqual(BipartiteGraph.complete(3).edge_count, 9)
        matching = BipartiteGraph.perfect_matching(4)
        self.assertEqual(list(matching.edges()), [(0, 0), (1, 1), (2, 2), (3, 3)])
        self.assertEqual(matching.k, 1)

    def test_from_rows_detects_degree(self):
        """Test degree detection for regular and irregular graphs"""
        self.assertEqual(BipartiteGraph.from_rows(3, SIX_CYCLE.rows).k, 2)
        self.assertIsNone(BipartiteGraph.from_rows(2, (0b11, 0b00)).k)
        # equal row degrees but unequal column degrees
        self.assertIsNone(BipartiteGraph.from_rows(2, (0b01, 0b01)).k)

    def test_rejects_wrong_degree(self):
        """Test that a claimed degree is checked"""
        with self.assertRaises(ShapeInvalid):
            BipartiteGraph(2, (0b11, 0b01), 2)
        with self.assertRaises(ShapeInvalid):
            BipartiteGraph(2, (0b100, 0b01))

    def test_transpose_and_relabel(self):
        """Test side swap and vertex relabelling"""
        graph = BipartiteGraph.from_rows(3, (0b001, 0b011, 0b110))
        self.assertEqual(graph.transpose().rows, (0b011, 0b110, 0b100))
        relabelled = SIX_CYCLE.relabel([1, 2, 0], [0, 1, 2])
        self.assertEqual(relabelled.edge_count, 6)
        self.assertTrue(relabelled.has_edge(1, 0))
        self.assertTrue(relabelled.has_edge(2, 2))

    def test_component_count(self):
        """Test components of cycles and matchings"""
        self.assertEqual(SIX_CYCLE.component_count(), 1)
        self.assertEqual(BipartiteGraph.perfect_matching(5).component_count(), 5)
        self.assertEqual(BipartiteGraph.empty(2).component_count(), 4)
        two_squares = BipartiteGraph(4, (0b0011, 0b0011, 0b1100, 0b1100), 2)
        self.assertEqual(two_squares.component_count(), 2)


class TestComplement(unittest.TestCase):
    """Test cases for complement"""

    def test_complete_graph(self):
        """Test that K_{n,n} complements to the empty graph"""
        empty = complement(BipartiteGraph.complete(4))
        self.assertEqual(empty.rows, (0, 0, 0, 0))
        self.assertEqual(empty.k, 0)

    def test_matching_of_order_two(self):
        """Test that the n=2 matching complements to the other matching"""
        self.assertEqual(complement(BipartiteGraph.perfect_matching(2)).rows, (0b10, 0b01))

    def test_six_cycle(self):
        """Test that a 6-cycle in K_{3,3} complements to a perfect matching"""
        other = complement(SIX_CYCLE)
        self.assertEqual(other.k, 1)
        self.assertEqual(other.rows, (0b100, 0b001, 0b010))

    def test_involution(self):
        """Test that complementing twice is the identity"""
        self.assertEqual(complement(complement(SIX_CYCLE)), SIX_CYCLE)


class TestTextFormat(unittest.TestCase):
    """Test cases for the BGF text format"""

    def test_format(self):
        """Test the exact BGF layout"""
        self.assertEqual(format_graph(BipartiteGraph.perfect_matching(2)), "BGF 2 1\n10\n01\n")
        self.assertEqual(format_graph(SIX_CYCLE), "BGF 3 2\n110\n011\n101\n")

    def test_irregular(self):
        """Test the '-' degree marker"""
        graph = BipartiteGraph.from_rows(2, (0b11, 0b00))
        text = format_graph(graph)
        self.assertEqual(text, "BGF 2 -\n11\n00\n")
        self.assertEqual(parse_graph(text), graph)

    def test_parse(self):
        """Test parsing and header validation"""
        self.assertEqual(parse_graph("BGF 3 2\n110\n011\n101\n"), SIX_CYCLE)
        with self.assertRaises(ShapeInvalid):
            parse_graph("BGF 2 1\n10\n")
        with self.assertRaises(ShapeInvalid):
            parse_graph("BGF 2 1\n12\n01\n")
        with self.assertRaises(ShapeInvalid):
            parse_graph("BGF 2 2\n10\n01\n")


if __name__ == '__main__':
    unittest.main()
