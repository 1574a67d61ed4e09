"""
Planarity testing with embedding and Kuratowski witnesses
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from graph_core.embedding import EmbeddedGraph, euler_genus_zero
from graph_core.graph import validate_simple_graph
from utils.exceptions import InternalConsistencyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlanarityResult:
    """Planarity verdict with a witness for either answer"""
    planar: bool
    embedding: Optional[EmbeddedGraph] = None
    kuratowski: Optional[nx.Graph] = None

    def __bool__(self) -> bool:
        return self.planar


def is_planar(G: nx.Graph) -> PlanarityResult:
    """
    Test planarity (left-right algorithm as implemented by networkx)

    Args:
        G: A simple graph

    Returns:
        PlanarityResult: an EmbeddedGraph passing the genus check when planar, otherwise
            a subgraph of G that is a subdivision of K5 or K3,3
    """
    validate_simple_graph(G)
    planar, certificate = nx.check_planarity(G, counterexample=True)
    if planar:
        embedding = EmbeddedGraph.from_planar_embedding(certificate)
        if not euler_genus_zero(embedding):
            raise InternalConsistencyError("Planarity witness fails the genus check")
        return PlanarityResult(True, embedding=embedding)
    return PlanarityResult(False, kuratowski=nx.Graph(certificate))


def is_planar_graph(G: nx.Graph) -> bool:
    """Boolean planarity test without building witnesses (used inside searches)"""
    return nx.check_planarity(G)[0]


def is_maximal_planar(G: nx.Graph) -> bool:
    """True iff G is planar with at least three vertices and exactly 3V - 6 edges"""
    n = G.number_of_nodes()
    return n >= 3 and G.number_of_edges() == 3 * n - 6 and is_planar_graph(G)


def kuratowski_kind(H: nx.Graph) -> Optional[str]:
    """
    Identify a Kuratowski subdivision

    Suppresses degree-2 vertices and compares the result with K5 and K3,3.

    Returns:
        Optional[str]: "K5", "K3,3", or None if H is neither subdivision
    """
    if H.number_of_nodes() == 0 or not nx.is_connected(H):
        return None
    if any(d not in (2, 3, 4) for _, d in H.degree):
        return None

    branch = {v for v, d in H.degree if d != 2}
    if not branch:
        return None

    # every branch path is walked once from each end
    walks = Counter()
    for b in branch:
        for first in H.neighbors(b):
            previous, current = b, first
            while current not in branch:
                nxt = [w for w in H.neighbors(current) if w != previous]
                previous, current = current, nxt[0]
            if current == b:
                return None
            walks[frozenset((b, current))] += 1
    if any(count != 2 for count in walks.values()):
        return None

    reduced = nx.Graph()
    reduced.add_nodes_from(branch)
    reduced.add_edges_from(tuple(pair) for pair in walks)
    if nx.is_isomorphic(reduced, nx.complete_graph(5)):
        return "K5"
    if nx.is_isomorphic(reduced, nx.complete_bipartite_graph(3, 3)):
        return "K3,3"
    return None
