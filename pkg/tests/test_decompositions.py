import unittest
import sys
import os
from dataclasses import replace

import networkx as nx

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from constructions.generators import (
    bipyramid, complete, complete_multipartite, cube, cycle, embedded, icosahedron, octahedron, path, tetrahedron,
    wheel,
)
from constructions.kleetope import kleetope
from decompositions.coloring import ProperColoring, check_coloring, three_color, two_color
from decompositions.forests import (
    ForestPartition, UnionFind, check_forest_partition, density_obstruction, forest_partition,
)
from decompositions.outerpath import Outerpath, triangulate_outerpath
from decompositions.path_copath import check_path_copath, cut_open, find_path_copath
from decompositions.two_outerpath import check_two_outerpath, find_two_outerpath
from utils.exceptions import DecompositionError
from utils.search import SearchBudget, SearchStatus


class TestOuterpath(unittest.TestCase):

    def test_fan_strip(self):
        """Test a strip of three triangles around a common vertex"""
        o = triangulate_outerpath([(0, 1, 2), (0, 2, 3), (0, 3, 4)])
        self.assertEqual(o.diagonals, ((0, 2), (0, 3)))
        self.assertEqual(o.boundary, (0, 1, 2, 3, 4))
        self.assertEqual(o.added_edges, frozenset())
        self.assertEqual(o.source_faces, (0, 1, 2))

    def test_quadrilateral_gets_a_diagonal(self):
        """Test that a single quadrilateral face is split by an added diagonal"""
        o = triangulate_outerpath([(0, 1, 2, 3)])
        self.assertEqual(len(o.triangles), 2)
        self.assertEqual(o.added_edges, frozenset({(0, 2)}))

    def test_check_rejects_disconnected_triangles(self):
        """Test that triangles must share their diagonal"""
        o = Outerpath(boundary=(0, 1, 2), triangles=((0, 1, 2), (3, 4, 5)), diagonals=((0, 1),),
                      ears=((0, 1, 2), (3, 4, 5)))
        with self.assertRaises(DecompositionError):
            o.check()

    def test_faces_must_be_simple(self):
        with self.assertRaises(DecompositionError):
            triangulate_outerpath([(0, 1, 0, 2)])


def two_outerpath_exists(E) -> bool:
    """Try every split of the faces into two sides"""
    faces = [{frozenset(e) for e in face.edges} for face in E.faces]
    shared = nx.Graph()
    shared.add_nodes_from(range(len(faces)))
    for f in range(len(faces)):
        for g in range(f + 1, len(faces)):
            if faces[f] & faces[g]:
                shared.add_edge(f, g, count=len(faces[f] & faces[g]))

    def is_path(side) -> bool:
        H = shared.subgraph(side)
        return (nx.is_connected(H) and H.number_of_edges() == len(side) - 1
                and all(d <= 2 for _, d in H.degree) and all(c == 1 for _, _, c in H.edges(data="count")))

    for mask in range(1, 2 ** len(faces) - 1, 2):
        sides = [[f for f in range(len(faces)) if (mask >> f) & 1 == s] for s in (1, 0)]
        if not all(is_path(side) for side in sides):
            continue
        cut = nx.Graph()
        for e in set().union(*faces):
            touching = {(mask >> f) & 1 for f in range(len(faces)) if e in faces[f]}
            if len(touching) == 2:
                cut.add_edge(*e)
        if (cut.number_of_nodes() == E.num_vertices and nx.is_connected(cut)
                and all(d == 2 for _, d in cut.degree)):
            return True
    return False


class TestTwoOuterpath(unittest.TestCase):

    def test_icosahedron(self):
        """Test that the icosahedron splits along a Hamiltonian cycle into two outerpaths"""
        E = icosahedron()
        result = find_two_outerpath(E)
        self.assertEqual(result.status, SearchStatus.FOUND)
        decomposition = result.certificate
        check_two_outerpath(E, decomposition)
        self.assertEqual(len(decomposition.hamiltonian_cycle), 12)
        self.assertEqual(sum(len(path) for path in decomposition.face_paths), 20)
        for outerpath in decomposition.outerpaths:
            self.assertEqual(outerpath.boundary_edges, decomposition.cycle_edges)

    def test_tetrahedron(self):
        result = find_two_outerpath(tetrahedron())
        self.assertTrue(result.found)
        self.assertEqual([len(o.triangles) for o in result.certificate.outerpaths], [2, 2])

    def test_tampered_sides_are_rejected(self):
        """Test that moving a face to the other side breaks the certificate"""
        E = icosahedron()
        decomposition = find_two_outerpath(E).certificate
        sides = dict(decomposition.side_assignment)
        sides[0] = 1 - sides[0]
        with self.assertRaises(DecompositionError):
            check_two_outerpath(E, replace(decomposition, side_assignment=sides))

    def test_agrees_with_exhaustive_split(self):
        """Test found and none answers against trying every split of the faces"""
        graphs = {
            "tetrahedron": tetrahedron(),
            "bipyramid5": bipyramid(5),
            "bipyramid6": bipyramid(6),
            "cube": cube(),
            "octahedron": octahedron(),
            "wheel5": embedded(wheel(5)),
            "K2,4": embedded(complete_multipartite(2, 4)),
        }
        for name, E in graphs.items():
            result = find_two_outerpath(E)
            self.assertNotEqual(result.status, SearchStatus.UNKNOWN, name)
            self.assertEqual(result.found, two_outerpath_exists(E), name)
            if result.found:
                check_two_outerpath(E, result.certificate)
        self.assertFalse(find_two_outerpath(graphs["K2,4"]).found)

    def test_non_hamiltonian_triangulation(self):
        """Test a triangulation whose eight apexes form a too-large independent set"""
        result = find_two_outerpath(kleetope(octahedron()), SearchBudget(2_000_000))
        self.assertEqual(result.status, SearchStatus.NONE)


class TestPathCopath(unittest.TestCase):

    def test_octahedron(self):
        """Test a path-copath decomposition and the strip cut open along the path"""
        E = octahedron()
        result = find_path_copath(E)
        self.assertTrue(result.found)
        decomposition = result.certificate
        check_path_copath(E, decomposition)
        self.assertEqual(len(decomposition.primal_path), 6)
        self.assertEqual(len(decomposition.dual_path), 8)

        strip = cut_open(E, decomposition)
        self.assertEqual(sum(len(nodes) for nodes in strip.appearances.values()), 2 * (6 - 1))
        self.assertEqual(len(strip.outerpath.boundary), 2 * (6 - 1))
        self.assertEqual(len(strip.outerpath.triangles), 8)

    def test_tampered_path_is_rejected(self):
        E = octahedron()
        decomposition = find_path_copath(E).certificate
        broken = replace(decomposition, primal_path=decomposition.primal_path[:-1])
        with self.assertRaises(DecompositionError):
            check_path_copath(E, broken)


class TestColoring(unittest.TestCase):

    def test_three_coloring(self):
        """Test 3-coloring of the octahedron and the absence of one for K4"""
        G = octahedron().graph
        result = three_color(G)
        self.assertTrue(result.found)
        check_coloring(G, result.certificate)
        self.assertEqual(three_color(complete(4)).status, SearchStatus.NONE)

    def test_two_coloring(self):
        G = cube().graph
        coloring = two_color(G).certificate
        self.assertEqual(len(coloring.classes()), 2)
        self.assertEqual(len(coloring.classes()[0]), 4)

    def test_long_cycles(self):
        """Test searches deeper than the interpreter recursion limit"""
        G = cycle(3001)
        result = three_color(G)
        self.assertTrue(result.found)
        check_coloring(G, result.certificate)
        self.assertEqual(two_color(G).status, SearchStatus.NONE)
        self.assertTrue(two_color(path(3000)).found)

    def test_monochromatic_edge(self):
        with self.assertRaises(DecompositionError):
            check_coloring(complete(2), ProperColoring({0: 1, 1: 1}, 2))


class TestForests(unittest.TestCase):

    def test_union_find_rollback(self):
        """Test undo of a union"""
        uf = UnionFind()
        self.assertTrue(uf.union(0, 1))
        self.assertFalse(uf.union(1, 0))
        uf.rollback()
        self.assertTrue(uf.union(0, 1))

    def test_partitions(self):
        """Test forest partitions and the density obstruction"""
        result = forest_partition(complete(4), 2)
        self.assertTrue(result.found)
        check_forest_partition(complete(4), result.certificate)

        G = octahedron().graph
        self.assertIsNotNone(density_obstruction(G, 2))
        self.assertEqual(forest_partition(G, 2).status, SearchStatus.NONE)
        exact = forest_partition(G, 3, greedy_first=False)
        self.assertTrue(exact.found)
        self.assertEqual(exact.certificate.size, 3)

        self.assertEqual(forest_partition(complete(5), 2).status, SearchStatus.NONE)

    def test_exact_search_on_long_graphs(self):
        """Test backtracking without the greedy pass on graphs with thousands of edges"""
        result = forest_partition(path(3000), 1, greedy_first=False)
        self.assertTrue(result.found)
        self.assertEqual(len(result.certificate.forests[0]), 2999)

        G = cycle(3000)
        result = forest_partition(G, 2, greedy_first=False)
        self.assertTrue(result.found)
        check_forest_partition(G, result.certificate)
        self.assertEqual(forest_partition(G, 1, greedy_first=False).status, SearchStatus.NONE)

    def test_cycle_in_part(self):
        with self.assertRaises(DecompositionError):
            check_forest_partition(complete(3), ForestPartition((frozenset({(0, 1), (1, 2), (0, 2)}),)))


if __name__ == '__main__':
    unittest.main()
