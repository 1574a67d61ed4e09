import unittest
import sys
import os

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from constructions.blowup import BlowupVertex, blowup
from constructions.generators import cube, icosahedron, octahedron, tetrahedron, wheel
from constructions.kleetope import kleetope
from decompositions.coloring import three_color, two_color
from decompositions.forests import ForestPartition
from decompositions.outerpath import triangulate_outerpath
from decompositions.path_copath import find_path_copath
from decompositions.two_outerpath import find_two_outerpath
from drawings.coloring_drawings import copy_index, draw_bipartite_thicknessk, draw_coloring_splitk
from drawings.forest_drawing import draw_bipartite_forest_biplanar, draw_forest_closed_blowup
from drawings.model import DrawingKind, biplanar_to_split2, restrict_drawing
from drawings.outerpath_drawings import draw_kleetope_split2, draw_path_copath_split2, draw_two_outerpath_biplanar
from drawings.strips import boundary_types_by_appearance, layout_strip
from graph_core.embedding import euler_genus_zero, rotation_from_faces
from graph_core.graph import edge_key
from utils.exceptions import DrawingError
from utils.search import SearchResult, SearchStatus
from verification.excess import excess_report, max_edges
from verification.validate import validate_drawing


class TestStripLayout(unittest.TestCase):

    def setUp(self):
        self.fan = triangulate_outerpath([(0, 1, 2), (0, 2, 3), (0, 3, 4)])

    def test_fan_layout_is_spherical(self):
        """Test the nested quadrilaterals of a three-triangle strip"""
        layout = layout_strip(self.fan, edge_type=lambda a, b: 0)
        self.assertEqual(len(layout.quadrilaterals), 2)
        self.assertEqual(len(layout.faces), 10)
        E = rotation_from_faces(layout.faces)
        self.assertTrue(euler_genus_zero(E))
        self.assertEqual(E.num_vertices, 10)
        # four copies per diagonal, two per boundary edge
        self.assertEqual(E.num_edges, 2 * 4 + 5 * 2)

    def test_ear_chords(self):
        """Test that chords give every triangle two disjoint pairs of image triangles"""
        layout = layout_strip(self.fan, edge_type=lambda a, b: 1, ear_chords=True)
        self.assertTrue(all(pairs is not None for pairs in layout.triangle_pairs))
        self.assertEqual(len(layout.helper_edges), 4)
        for pairs in layout.triangle_pairs:
            for first, second in pairs:
                self.assertFalse(set(layout.faces[first]) & set(layout.faces[second]))

    def test_single_triangle_is_rejected(self):
        with self.assertRaises(DrawingError):
            layout_strip(triangulate_outerpath([(0, 1, 2)]), edge_type=lambda a, b: 0)

    def test_bad_edge_type(self):
        with self.assertRaises(DrawingError):
            layout_strip(self.fan, edge_type=lambda a, b: 2)

    def test_boundary_types_by_appearance(self):
        """Test first and second appearances of a base edge"""
        strip = triangulate_outerpath([(("a", 0), ("b", 0), ("c", 0)), (("a", 0), ("c", 0), ("b", 1))])
        types = boundary_types_by_appearance(strip, base=lambda node: node[0])
        self.assertEqual(sorted(types.values()), [0, 0, 1, 1])


class TestOuterpathDrawings(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ico = icosahedron()
        cls.decomposition = find_two_outerpath(cls.ico).certificate

    def test_two_outerpath_biplanar(self):
        """Test the biplanar drawing of the 2-blowup of the icosahedron"""
        drawing = draw_two_outerpath_biplanar(self.ico, self.decomposition)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.kind, DrawingKind.thickness(2))
        self.assertEqual(drawing.num_edges, 120)
        self.assertEqual(excess_report(drawing).total_excess, 12)
        self.assertTrue(all(len(placed) == 2 for placed in drawing.images_of().values()))

    def test_merge_into_split2(self):
        """Test merging the two planes into one split-2 plane"""
        merged = biplanar_to_split2(draw_two_outerpath_biplanar(self.ico, self.decomposition))
        self.assertTrue(validate_drawing(merged).valid)
        self.assertEqual(merged.kind, DrawingKind.split(2))
        self.assertEqual(len(merged.planes), 1)
        self.assertEqual(merged.metadata["merged_from"], "thickness(2)")
        self.assertIs(biplanar_to_split2(merged), merged)

    def test_kleetope_split2(self):
        """Test the split-2 drawing of the 2-blowup of the icosahedron's Kleetope"""
        drawing = draw_kleetope_split2(self.ico, self.decomposition)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.target.number_of_nodes(), 64)
        self.assertEqual(drawing.num_edges, 360)
        self.assertEqual(excess_report(drawing).total_excess, 18)
        self.assertEqual(drawing.metadata["apex_level"], 1)

    def test_dropping_apexes_recovers_previous_level(self):
        """Test restricting the Kleetope drawing to the 2-blowup of the icosahedron"""
        drawing = restrict_drawing(draw_kleetope_split2(self.ico, self.decomposition), blowup(self.ico.graph, 2))
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.kind, DrawingKind.split(2))
        self.assertEqual(drawing.num_edges, 120)

    def test_kleetope_of_tetrahedron(self):
        E = tetrahedron()
        drawing = draw_kleetope_split2(E, find_two_outerpath(E))
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.num_edges, 4 * 18)

    def test_kleetope_of_kleetope_of_tetrahedron(self):
        """Test the split-2 drawing of the 2-blowup of the twice-stellated tetrahedron"""
        E = kleetope(tetrahedron())
        drawing = draw_kleetope_split2(E, find_two_outerpath(E))
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.target.number_of_nodes(), 40)
        self.assertEqual(drawing.num_edges, 216)
        self.assertEqual(excess_report(drawing).total_excess, 18)

    def test_kleetope_needs_triangulation(self):
        with self.assertRaises(DrawingError):
            draw_kleetope_split2(cube(), self.decomposition)

    def test_missing_certificate(self):
        """Test that a search without a certificate cannot be drawn"""
        with self.assertRaises(DrawingError):
            draw_two_outerpath_biplanar(self.ico, SearchResult(SearchStatus.NONE, reason="none"))

    def test_path_copath_split2(self):
        """Test the split-2 drawing of the 2-blowup of the octahedron"""
        E = octahedron()
        drawing = draw_path_copath_split2(E, find_path_copath(E))
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.num_edges, 48)
        self.assertEqual(drawing.metadata["appearances"], 10)
        self.assertEqual(excess_report(drawing).total_excess, 3 * drawing.num_images - 6 - 48)


class TestColoringDrawings(unittest.TestCase):

    def test_copy_index_is_a_bijection(self):
        """Test that any two colors see every copy pair exactly once"""
        k = 4
        for a, b in ((0, 1), (0, 2), (1, 2)):
            pairs = {(copy_index(a, i, j, k), copy_index(b, i, j, k)) for i in range(k) for j in range(k)}
            self.assertEqual(len(pairs), k * k)

    def test_coloring_split3(self):
        """Test the split-3 drawing of the 3-blowup of the octahedron"""
        G = octahedron().graph
        drawing = draw_coloring_splitk(G, three_color(G), 3)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.num_edges, 108)
        self.assertGreater(drawing.num_edges, max_edges(DrawingKind.split(2), 18))
        self.assertTrue(all(len(placed) == 3 for placed in drawing.images_of().values()))

    def test_bipartite_thickness(self):
        """Test thickness-k drawings of k-blowups of the cube"""
        G = cube().graph
        for k in (2, 3):
            drawing = draw_bipartite_thicknessk(G, two_color(G), k)
            self.assertTrue(validate_drawing(drawing).valid)
            self.assertEqual(drawing.kind, DrawingKind.thickness(k))
            self.assertEqual(drawing.num_edges, 12 * k * k)
        with self.assertRaises(DrawingError):
            biplanar_to_split2(draw_bipartite_thicknessk(G, two_color(G), 3))

    def test_coloring_must_match(self):
        G = octahedron().graph
        with self.assertRaises(DrawingError):
            draw_bipartite_thicknessk(G, three_color(G), 2)


class TestForestDrawings(unittest.TestCase):

    def setUp(self):
        self.G = wheel(7)
        rim = [(i, i + 1) for i in range(1, 6)]
        spokes = [(0, i) for i in range(2, 7)]
        self.partition = ForestPartition((
            frozenset(edge_key(u, v) for u, v in [(0, 1)] + rim),
            frozenset(edge_key(u, v) for u, v in spokes + [(1, 6)]),
        ))

    def test_closed_blowup_of_wheel(self):
        """Test the thickness-2 drawing of the closed 2-blowup of a wheel"""
        drawing = draw_forest_closed_blowup(self.G, self.partition)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertTrue(drawing.closed)
        self.assertEqual(drawing.num_edges, 4 * 12 + 7)
        report = excess_report(drawing)
        self.assertEqual(report.total_excess, 17)
        self.assertEqual(report.formula_total, 17)

    def test_restriction_to_open_blowup(self):
        """Test restricting the closed drawing to the open blowup"""
        closed = draw_forest_closed_blowup(self.G, self.partition)
        drawing = restrict_drawing(closed, blowup(self.G, 2), closed=False)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertEqual(drawing.num_edges, 48)
        with self.assertRaises(DrawingError):
            restrict_drawing(drawing, blowup(self.G, 2, closed=True))

    def test_bipartite_forest_biplanar(self):
        G = cube().graph
        drawing = draw_bipartite_forest_biplanar(G)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertFalse(drawing.closed)
        self.assertEqual(drawing.num_edges, 48)
        with self.assertRaises(DrawingError):
            draw_bipartite_forest_biplanar(octahedron().graph)

    def test_isolated_vertex(self):
        """Test that isolated base vertices keep their intra-copy edge"""
        G = wheel(4).copy()
        G.add_node(9)
        partition = ForestPartition((
            frozenset({(0, 1), (0, 2), (0, 3)}),
            frozenset({(1, 2), (2, 3)}),
            frozenset({(1, 3)}),
        ))
        drawing = draw_forest_closed_blowup(G, partition)
        self.assertTrue(validate_drawing(drawing).valid)
        self.assertTrue(drawing.target.has_edge(BlowupVertex(9, 0), BlowupVertex(9, 1)))


if __name__ == '__main__':
    unittest.main()
