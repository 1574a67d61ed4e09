import unittest
import sys
import os

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from constructions.blowup import blowup, blowup_edge_count
from constructions.generators import complete, icosahedron
from constructions.kleetope import kleetope, kleetope_vertex_counts
from drawings.model import DrawingKind
from verification.excess import max_edges


class TestCountingIdentities(unittest.TestCase):

    def setUp(self):
        self.ico = icosahedron()

    def test_blowup_edge_count(self):
        """Test the k-blowup edge count against the built graph"""
        for k in (1, 2, 3):
            B = blowup(self.ico.graph, k)
            self.assertEqual(B.number_of_nodes(), 12 * k)
            self.assertEqual(B.number_of_edges(), blowup_edge_count(12, 30, k))
        closed = blowup(complete(4), 2, closed=True)
        self.assertEqual(closed.number_of_edges(), 4 * 6 + 4)

    def test_edge_bounds(self):
        """Test the edge bounds of the drawing kinds"""
        self.assertEqual(max_edges(DrawingKind.thickness(1), 12), 30)
        self.assertEqual(max_edges(DrawingKind.thickness(2), 24), 132)
        self.assertEqual(max_edges(DrawingKind.split(2), 18), 102)

    def test_kleetope_counts(self):
        """Test vertex and edge counts of a Kleetope"""
        K = kleetope(self.ico)
        self.assertEqual(K.num_vertices, 32)
        self.assertEqual(K.num_edges, 90)
        self.assertEqual(kleetope_vertex_counts(12, 2), [12, 32, 92])


if __name__ == '__main__':
    unittest.main()
