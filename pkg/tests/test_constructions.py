import unittest
import sys
import os
import random

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

import networkx as nx

from constructions.blowup import BlowupVertex, base_graph, blowup, blowup_edge_count, is_closed, multiplicity
from constructions.generators import (
    GENERATORS, bipyramid, complete, complete_multipartite, cube, icosahedron, named_graph, octahedron, wheel,
)
from constructions.kleetope import (
    apex_level, apex_vertex, is_apex, iterated_kleetope, kleetope, kleetope_vertex_counts, minimum_edge_weight,
    vertex_tag,
)
from graph_core.embedding import EmbeddedGraph, euler_genus_zero
from graph_core.planarity import is_maximal_planar
from utils.exceptions import ConstructionError


class TestBlowup(unittest.TestCase):

    def test_open_blowup(self):
        """Test vertices, edges and recorded parameters of an open blowup"""
        B = blowup(nx.path_graph(3), 2)
        self.assertEqual(B.number_of_nodes(), 6)
        self.assertEqual(B.number_of_edges(), 8)
        self.assertTrue(B.has_edge(BlowupVertex(0, 0), BlowupVertex(1, 1)))
        self.assertFalse(B.has_edge(BlowupVertex(0, 0), BlowupVertex(0, 1)))
        self.assertEqual(multiplicity(B), 2)
        self.assertFalse(is_closed(B))

    def test_closed_blowup(self):
        """Test the intra-copy edges of a closed blowup"""
        B = blowup(nx.path_graph(3), 3, closed=True)
        self.assertEqual(B.number_of_edges(), 9 * 2 + 3 * 3)
        self.assertTrue(B.has_edge(BlowupVertex(1, 0), BlowupVertex(1, 2)))
        self.assertTrue(is_closed(B))
        self.assertEqual(set(base_graph(B).edges), {(0, 1), (1, 2)})

    def test_counts_on_random_graphs(self):
        """Test vertex and edge counts of open and closed blowups for k up to 4"""
        rng = random.Random(4)
        for _ in range(20):
            n = rng.randint(1, 8)
            G = nx.gnm_random_graph(n, rng.randint(0, n * (n - 1) // 2), seed=rng.randrange(10 ** 6))
            m = G.number_of_edges()
            for k in range(1, 5):
                for closed in (False, True):
                    B = blowup(G, k, closed=closed)
                    self.assertEqual(B.number_of_nodes(), k * n)
                    self.assertEqual(B.number_of_edges(), blowup_edge_count(n, m, k, closed))
                    self.assertEqual({frozenset(e) for e in base_graph(B).edges}, {frozenset(e) for e in G.edges})

    def test_blowups_of_triangle(self):
        """Test that blowups of K3 are complete tripartite"""
        for k in range(1, 5):
            self.assertTrue(nx.is_isomorphic(blowup(complete(3), k), complete_multipartite(k, k, k)))
            twice = blowup(blowup(complete(3), 2), k)
            self.assertTrue(nx.is_isomorphic(twice, complete_multipartite(2 * k, 2 * k, 2 * k)))

    def test_invalid_multiplicity(self):
        """Test that k must be a positive integer"""
        for k in (0, -1, True, 1.5):
            with self.assertRaises(ConstructionError):
                blowup(nx.path_graph(2), k)


class TestKleetope(unittest.TestCase):

    def test_kleetope_of_cube(self):
        """Test that the Kleetope of the cube is maximal planar"""
        K = kleetope(cube())
        self.assertEqual(K.num_vertices, 14)
        self.assertEqual(K.num_edges, 12 + 24)
        self.assertTrue(euler_genus_zero(K))
        self.assertTrue(is_maximal_planar(K.graph))
        apexes = [v for v in K.vertices if is_apex(v)]
        self.assertEqual(len(apexes), 6)
        self.assertTrue(all(K.degree(w) == 4 for w in apexes))

    def test_apex_ids(self):
        """Test that apex ids are stable under rotation of the face cycle"""
        self.assertEqual(apex_vertex(1, (2, 0, 1)), apex_vertex(1, (0, 1, 2)))
        w = apex_vertex(2, (0, 1, 2))
        self.assertEqual(apex_level(w), 2)
        self.assertTrue(vertex_tag(w).is_apex)
        self.assertEqual(apex_level(5), 0)

    def test_iterated_kleetope(self):
        """Test vertex counts and degree-3 apexes of iterated Kleetopes"""
        E = bipyramid(5)
        K = iterated_kleetope(E, 2)
        self.assertEqual(K.num_vertices, kleetope_vertex_counts(5, 2)[-1])
        self.assertEqual(K.num_vertices, 29)
        self.assertTrue(is_maximal_planar(K.graph))
        self.assertEqual({apex_level(v) for v in K.vertices}, {0, 1, 2})
        self.assertTrue(all(K.degree(v) == 3 for v in K.vertices if apex_level(v) == 2))
        self.assertEqual(minimum_edge_weight(K.graph), 3 + 6)
        self.assertEqual(minimum_edge_weight(kleetope(icosahedron()).graph), 3 + 10)

    def test_iterated_counts(self):
        """Test the closed form n -> 3n - 4"""
        self.assertEqual(kleetope_vertex_counts(49, 3), [49, 143, 425, 1271])

    def test_iterated_bipyramid(self):
        """Test the vertex counts of three Kleetope rounds on the 49-vertex bipyramid"""
        K = iterated_kleetope(bipyramid(49), 3)
        self.assertEqual(K.num_vertices, 1271)
        self.assertEqual(K.num_edges, 3 * 1271 - 6)
        for level, expected in enumerate([49, 143, 425, 1271]):
            self.assertEqual(sum(1 for v in K.vertices if apex_level(v) <= level), expected)

    def test_kleetope_rejects_isolated_vertices(self):
        """Test input checks"""
        with self.assertRaises(ConstructionError):
            kleetope(EmbeddedGraph({0: []}))
        with self.assertRaises(ConstructionError):
            iterated_kleetope(icosahedron(), -1)


class TestGenerators(unittest.TestCase):

    def test_embedded_solids(self):
        """Test the named embedded graphs"""
        self.assertEqual(icosahedron().num_edges, 30)
        self.assertEqual(octahedron().num_edges, 12)
        self.assertTrue(is_maximal_planar(bipyramid(7).graph))
        self.assertEqual(wheel(7).number_of_edges(), 12)

    def test_named_graph(self):
        """Test the registry"""
        self.assertIn("icosahedron", GENERATORS)
        self.assertEqual(named_graph("complete", 5).number_of_edges(), 10)
        self.assertEqual(named_graph("complete-multipartite", 2, 2, 2).number_of_edges(), 12)
        with self.assertRaises(ConstructionError):
            named_graph("nonexistent")
        with self.assertRaises(ConstructionError):
            named_graph("cycle", 2)


if __name__ == '__main__':
    unittest.main()
