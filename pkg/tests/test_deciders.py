import unittest
import sys
import os
import random
from unittest import mock

import networkx as nx

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from constructions.generators import complete, complete_multipartite, icosahedron, wheel
from drawings.model import DrawingKind
from utils.config import get_decider_config
from utils.exceptions import VerificationError
from utils.search import SearchBudget
from verification.deciders import (
    Answer, decide_biplanar, decide_planar, decide_split2, naive_biplanar_oracle, split_enumeration_size,
)
from verification.validate import validate_drawing

SLOW = os.getenv(get_decider_config().slow_tests_env_var) == "1"


class TestPlanarDecider(unittest.TestCase):

    def test_planar_and_not(self):
        result = decide_planar(icosahedron().graph)
        self.assertEqual(result.answer, Answer.YES)
        self.assertTrue(validate_drawing(result.certificate).valid)
        self.assertEqual(decide_planar(complete(5)).answer, Answer.NO)


class TestBiplanarDecider(unittest.TestCase):

    def test_small_complete_graphs(self):
        """Test that K5, K6 and K7 come with validated thickness-2 certificates"""
        for n in (5, 6, 7):
            result = decide_biplanar(complete(n))
            self.assertEqual(result.answer, Answer.YES, f"K{n}")
            self.assertEqual(result.certificate.kind, DrawingKind.thickness(2))
            self.assertTrue(validate_drawing(result.certificate).valid)

    def test_planar_graph(self):
        result = decide_biplanar(icosahedron().graph)
        self.assertEqual(result.answer, Answer.YES)
        self.assertEqual(result.nodes, 0)

    def test_worker_pool(self):
        """Test the parallel search on K6"""
        result = decide_biplanar(complete(6), max_workers=2, split_depth=3)
        self.assertEqual(result.answer, Answer.YES)
        self.assertTrue(validate_drawing(result.certificate).valid)

    def test_edge_bound(self):
        """Test that too many edges give an immediate no"""
        result = decide_biplanar(complete(13))
        self.assertEqual(result.answer, Answer.NO)
        self.assertIn("6n - 12", result.reason)

    def test_agrees_with_naive_oracle(self):
        """Test agreement with plain enumeration on small graphs"""
        graphs = {
            "K5": complete(5),
            "K3,3": complete_multipartite(3, 3),
            "K3,4": complete_multipartite(3, 4),
            "W6": wheel(6),
            "K2,2,2": complete_multipartite(2, 2, 2),
        }
        for name, G in graphs.items():
            expected = Answer.YES if naive_biplanar_oracle(G) else Answer.NO
            self.assertEqual(decide_biplanar(G).answer, expected, name)

    def test_agrees_with_naive_oracle_on_random_graphs(self):
        """Test agreement with plain enumeration on random graphs with at most 12 edges"""
        rng = random.Random(20)
        for trial in range(25):
            n = rng.randint(5, 8)
            G = nx.gnm_random_graph(n, rng.randint(n, 12), seed=rng.randrange(10 ** 6))
            expected = Answer.YES if naive_biplanar_oracle(G) else Answer.NO
            self.assertEqual(decide_biplanar(G).answer, expected, sorted(G.edges))
            self.assertEqual(decide_biplanar(G, max_workers=2, split_depth=2).answer, expected)

    def test_failing_subtree_is_raised(self):
        """Test that an error inside a subtree search surfaces instead of a no"""
        with mock.patch("verification.deciders._search_subtree", side_effect=RuntimeError("subtree failed")):
            with self.assertRaises(RuntimeError):
                decide_biplanar(complete(6), max_workers=2, split_depth=2)
            with self.assertRaises(RuntimeError):
                decide_biplanar(complete(6), max_workers=1)

    def test_oracle_edge_limit(self):
        with self.assertRaises(VerificationError):
            naive_biplanar_oracle(complete(7))

    def test_k8_is_biplanar(self):
        result = decide_biplanar(complete(8))
        self.assertEqual(result.answer, Answer.YES)
        self.assertTrue(validate_drawing(result.certificate).valid)

    @unittest.skipUnless(SLOW, "slow search")
    def test_k9_is_not_biplanar(self):
        self.assertEqual(decide_biplanar(complete(9), SearchBudget()).answer, Answer.NO)


class TestSplit2Decider(unittest.TestCase):

    def test_k5_splits(self):
        """Test that K5 has a split-2 drawing"""
        result = decide_split2(complete(5))
        self.assertEqual(result.answer, Answer.YES)
        self.assertEqual(result.certificate.kind, DrawingKind.split(2))
        self.assertTrue(validate_drawing(result.certificate).valid)

    def test_planar_needs_no_split(self):
        result = decide_split2(wheel(7))
        self.assertEqual(result.answer, Answer.YES)
        self.assertEqual(result.certificate.num_images, 7)

    def test_edge_bound(self):
        """Test that K6,6,6 has more than 6n - 6 edges"""
        result = decide_split2(complete_multipartite(6, 6, 6))
        self.assertEqual(result.answer, Answer.NO)

    def test_budget_gives_unknown(self):
        self.assertEqual(split_enumeration_size(complete(5)), 5 * 8)
        result = decide_split2(complete(5), SearchBudget(1))
        self.assertEqual(result.answer, Answer.UNKNOWN)


if __name__ == '__main__':
    unittest.main()
