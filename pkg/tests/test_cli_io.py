import unittest
import sys
import os
import json
import tempfile

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from cli_io.cli import EXIT_INVALID, EXIT_NONE, EXIT_OK, EXIT_USAGE, main
from cli_io.serialization import (
    DRAWING, REPORT, decode_any_graph, decode_certificate, decode_drawing, encode_any_graph, encode_certificate,
    encode_drawing, read_document, write_document,
)
from cli_io.svg_export import crossing_pairs, plane_positions
from constructions.blowup import BlowupVertex, blowup
from constructions.generators import cube, icosahedron, octahedron, path
from decompositions.coloring import check_coloring, three_color
from decompositions.two_outerpath import check_two_outerpath, find_two_outerpath
from drawings.model import DrawingKind, ImageId, LayeredDrawing, PlaneDrawing
from drawings.outerpath_drawings import draw_kleetope_split2, draw_two_outerpath_biplanar
from graph_core.embedding import EmbeddedGraph
from utils.config import setup_logging
from utils.exceptions import FormatError


class TestSerialization(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def _through_file(self, doc, name):
        return read_document(write_document(doc, os.path.join(self.dir, name)))

    def test_graphs(self):
        """Test stored graphs, embeddings and blowups"""
        E = icosahedron()
        self.assertEqual(decode_any_graph(self._through_file(encode_any_graph(E), "ico.json")), E)

        B = blowup(cube().graph, 2, closed=True)
        stored = decode_any_graph(self._through_file(encode_any_graph(B), "cube2.json"))
        self.assertEqual(set(stored.nodes), set(B.nodes))
        self.assertEqual(stored.number_of_edges(), B.number_of_edges())
        self.assertEqual(stored.graph["k"], 2)
        self.assertTrue(stored.graph["closed"])

    def test_certificates(self):
        """Test that stored certificates still check against their stored graph"""
        E = icosahedron()
        doc = encode_certificate("two-outerpath", E, find_two_outerpath(E).certificate)
        kind, graph, certificate = decode_certificate(self._through_file(doc, "cert.json"))
        self.assertEqual(kind, "two-outerpath")
        check_two_outerpath(graph, certificate)

        G = octahedron().graph
        doc = encode_certificate("3color", G, three_color(G).certificate)
        kind, graph, certificate = decode_certificate(self._through_file(doc, "color.json"))
        check_coloring(graph, certificate)

    def test_drawing(self):
        """Test that a drawing with apex vertex ids survives storage"""
        E = icosahedron()
        drawing = draw_kleetope_split2(E, find_two_outerpath(E))
        stored = decode_drawing(self._through_file(encode_drawing(drawing), "kleetope.json"))
        self.assertEqual(stored, drawing)
        self.assertEqual(stored.metadata["apex_level"], 1)

    def test_malformed_documents(self):
        """Test that broken files raise FormatError"""
        broken = os.path.join(self.dir, "broken.json")
        with open(broken, "w", encoding="utf-8") as f:
            f.write("{not json")
        with self.assertRaises(FormatError):
            read_document(broken)

        doc = encode_any_graph(path(3))
        with self.assertRaises(FormatError):
            decode_drawing(doc)
        with self.assertRaises(FormatError):
            decode_any_graph(dict(doc, format_version=99))
        with self.assertRaises(FormatError):
            decode_any_graph(dict(doc, edges=[[0, 7]]))
        with self.assertRaises(FormatError):
            read_document(write_document(doc, os.path.join(self.dir, "graph.json")), DRAWING)

        with self.assertRaises(FormatError):
            decode_any_graph({"vertices": [0, 1], "edges": [[0, 0]]})
        with self.assertRaises(FormatError):
            decode_any_graph({"vertices": [0, 1], "edges": [[0, 1], [1, 0]]})
        with self.assertRaises(FormatError):
            decode_any_graph({"vertices": [0, 1, 2], "edges": [[0, 1]], "rotation": {"0": [1], "1": [0], "7": []}})
        with self.assertRaises(FormatError):
            decode_any_graph({"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]], "rotation": {"0": [1], "1": [0]}})

    def test_plain_graph_files(self):
        """Test files holding only vertices, edges and a rotation map"""
        square = {
            "vertices": [0, 1, 2, 3],
            "edges": [[0, 1], [0, 3], [1, 2], [2, 3]],
            "rotation": {"0": [1, 3], "1": [0, 2], "2": [1, 3], "3": [0, 2]},
        }
        stored = os.path.join(self.dir, "square.json")
        with open(stored, "w", encoding="utf-8") as f:
            json.dump(square, f)
        E = decode_any_graph(read_document(stored))
        self.assertIsInstance(E, EmbeddedGraph)
        self.assertEqual(E.num_edges, 4)
        self.assertEqual(len(E.faces), 2)

        doc = encode_any_graph(E)
        self.assertEqual(doc["rotation"], square["rotation"])
        self.assertEqual(doc["edges"], square["edges"])
        self.assertEqual(decode_any_graph(doc), E)

        G = decode_any_graph({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})
        self.assertEqual(sorted(G.edges), [("a", "b"), ("b", "c")])

    def test_tuple_vertex_keys(self):
        """Test that rotation keys of structured ids are compact JSON text"""
        E = EmbeddedGraph({(0, "x"): [1], 1: [(0, "x")]})
        doc = encode_any_graph(E)
        self.assertEqual(set(doc["rotation"]), {"[0,\"x\"]", "1"})
        self.assertEqual(decode_any_graph(doc), E)

        with self.assertRaises(FormatError):
            encode_any_graph(EmbeddedGraph({1: ["1"], "1": [1]}))

    def test_drawing_layout(self):
        """Test the stored shape of a split drawing"""
        E = icosahedron()
        doc = encode_drawing(draw_kleetope_split2(E, find_two_outerpath(E)))
        self.assertEqual(doc["kind"], {"split": 2})
        plane = doc["planes"][0]
        self.assertEqual(set(plane), {"images", "edges", "rotation"})
        self.assertEqual(set(plane["images"][0]), {"base", "copy", "occ"})
        self.assertEqual(len(plane["rotation"]), len(plane["images"]))


class TestSvgLayout(unittest.TestCase):

    def test_straight_line_layouts(self):
        """Test that barycentric layouts of polyhedra have no crossings"""
        for E in (icosahedron(), cube(), octahedron()):
            positions = plane_positions(E)
            self.assertEqual(set(positions), set(E.vertices))
            self.assertEqual(crossing_pairs(E, positions), [])

    def test_drawing_planes_have_no_crossings(self):
        """Test straight-line layouts of the two-outerpath and Kleetope planes"""
        E = icosahedron()
        decomposition = find_two_outerpath(E)
        for drawing in (draw_two_outerpath_biplanar(E, decomposition), draw_kleetope_split2(E, decomposition)):
            for plane in drawing.planes:
                self.assertEqual(crossing_pairs(plane.embedding, plane_positions(plane.embedding)), [])

    def test_components_side_by_side(self):
        E = EmbeddedGraph({0: [1], 1: [0], 2: []})
        positions = plane_positions(E)
        self.assertLess(max(positions[0][0], positions[1][0]), positions[2][0])


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def _path(self, name):
        return os.path.join(self.dir, name)

    def test_full_pipeline(self):
        """Test generate, decompose, draw, verify and export-svg on the icosahedron"""
        graph, cert, drawing, report = (self._path(n) for n in ("ico.json", "cert.json", "draw.json", "report.json"))
        self.assertEqual(main(["generate", "icosahedron", "-o", graph]), EXIT_OK)
        self.assertEqual(main(["decompose", "two-outerpath", "--input", graph, "-o", cert]), EXIT_OK)
        self.assertEqual(main(["draw", "two-outerpath", "--certificate", cert, "-o", drawing]), EXIT_OK)
        self.assertEqual(main(["verify", drawing, "-o", report]), EXIT_OK)

        stored = read_document(report, REPORT)
        self.assertTrue(stored["valid"])
        self.assertEqual(stored["total_excess"], 12)

        first, second = self._path("a.svg"), self._path("b.svg")
        self.assertEqual(main(["export-svg", drawing, "-o", first]), EXIT_OK)
        self.assertEqual(main(["export-svg", drawing, "-o", second]), EXIT_OK)
        with open(first, "rb") as f:
            content = f.read()
        with open(second, "rb") as f:
            self.assertEqual(f.read(), content)
        self.assertIn(b"<svg", content)

    def test_draw_searches_when_no_certificate(self):
        graph, drawing = self._path("octa.json"), self._path("octa-draw.json")
        self.assertEqual(main(["generate", "octahedron", "-o", graph]), EXIT_OK)
        self.assertEqual(main(["draw", "path-copath", "--input", graph, "-o", drawing]), EXIT_OK)
        self.assertEqual(decode_drawing(read_document(drawing)).num_edges, 48)

    def test_exit_codes(self):
        """Test usage errors, missing certificates and no answers"""
        self.assertEqual(main(["frobnicate"]), EXIT_USAGE)
        self.assertEqual(main(["verify", self._path("missing.json")]), EXIT_USAGE)

        k4 = self._path("k4.json")
        self.assertEqual(main(["generate", "complete", "4", "-o", k4]), EXIT_OK)
        self.assertEqual(main(["decompose", "3color", "--input", k4]), EXIT_NONE)

        dense = self._path("k666.json")
        self.assertEqual(main(["generate", "complete-multipartite", "6", "6", "6", "-o", dense]), EXIT_OK)
        self.assertEqual(main(["decide", "split2", "--input", dense, "-o", self._path("no.json")]), EXIT_NONE)
        with open(self._path("no.json"), encoding="utf-8") as f:
            self.assertEqual(json.load(f)["answer"], "no")

    def test_kleetope_and_blowup_of_stored_graph(self):
        """Test the kleetope and blowup operators applied to a stored graph"""
        ico, klee, blown = (self._path(n) for n in ("ico.json", "klee.json", "blown.json"))
        self.assertEqual(main(["generate", "icosahedron", "-o", ico]), EXIT_OK)

        self.assertEqual(main(["generate", "kleetope", "--input", ico, "-o", klee]), EXIT_OK)
        E = decode_any_graph(read_document(klee))
        self.assertEqual((E.num_vertices, E.num_edges), (32, 90))
        self.assertEqual(main(["generate", "kleetope", "--input", ico, "--iterations", "0"]), EXIT_USAGE)

        self.assertEqual(main(["generate", "blowup", "--input", ico, "-o", blown]), EXIT_USAGE)
        self.assertFalse(os.path.exists(blown))
        self.assertEqual(main(["generate", "blowup", "-k", "2", "--input", ico, "-o", blown]), EXIT_OK)
        B = decode_any_graph(read_document(blown))
        self.assertEqual((B.number_of_nodes(), B.number_of_edges()), (24, 120))

    def test_graph_argument_forms(self):
        """Test positional graph files, the --input alias and float budgets"""
        k5 = self._path("k5.json")
        self.assertEqual(main(["generate", "complete", "5", "-o", k5]), EXIT_OK)
        self.assertEqual(main(["decide", "biplanar", k5, "--budget", "1e9", "-o", self._path("a.json")]), EXIT_OK)
        self.assertEqual(main(["decide", "biplanar", "--input", k5, "-o", self._path("b.json")]), EXIT_OK)
        self.assertEqual(main(["decide", "planar", k5, "-o", self._path("c.json")]), EXIT_NONE)
        self.assertEqual(main(["decompose", "3color", k5, "--budget", "2.5e3"]), EXIT_NONE)
        self.assertEqual(main(["decide", "biplanar", k5, "--budget", "lots"]), EXIT_USAGE)
        self.assertEqual(main(["decide", "biplanar"]), EXIT_USAGE)
        with open(self._path("a.json"), encoding="utf-8") as f:
            self.assertEqual(json.load(f)["answer"], "yes")

    def test_repeated_runs_write_identical_files(self):
        ico = self._path("ico.json")
        self.assertEqual(main(["generate", "icosahedron", "-o", ico]), EXIT_OK)
        contents = []
        for name in ("first.json", "second.json"):
            self.assertEqual(main(["draw", "kleetope", "--input", ico, "-o", self._path(name)]), EXIT_OK)
            with open(self._path(name), "rb") as f:
                contents.append(f.read())
        self.assertEqual(contents[0], contents[1])

    def test_log_file(self):
        log = self._path("logs/run.log")
        self.assertEqual(main(["--log-level", "DEBUG", "--log-file", log,
                               "generate", "path", "3", "-o", self._path("p3.json")]), EXIT_OK)
        setup_logging("WARNING")
        with open(log, encoding="utf-8") as f:
            self.assertIn("Wrote graph document", f.read())

    def test_invalid_drawing(self):
        """Test that verify and export-svg reject a drawing with a missing edge"""
        rotation = {ImageId(BlowupVertex(v, 0), 0): [] for v in (0, 1)}
        invalid = LayeredDrawing(kind=DrawingKind.thickness(1), planes=(PlaneDrawing(EmbeddedGraph(rotation)),),
                                 target=blowup(path(2), 1))
        stored = write_document(encode_drawing(invalid), self._path("invalid.json"))
        self.assertEqual(main(["verify", stored]), EXIT_INVALID)
        self.assertEqual(main(["export-svg", stored, "-o", self._path("invalid.svg")]), EXIT_INVALID)
        self.assertFalse(os.path.exists(self._path("invalid.svg")))


if __name__ == '__main__':
    unittest.main()
