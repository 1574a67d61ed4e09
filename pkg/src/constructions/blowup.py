"""
Open and closed k-blowups
"""

import logging
from itertools import combinations
from typing import Hashable, NamedTuple

import networkx as nx

from graph_core.graph import sorted_edges, sorted_vertices, validate_simple_graph
from utils.exceptions import ConstructionError

logger = logging.getLogger(__name__)


class BlowupVertex(NamedTuple):
    """Copy `copy` of base vertex `base` in a k-blowup"""
    base: Hashable
    copy: int


def blowup(G: nx.Graph, k: int, closed: bool = False) -> nx.Graph:
    """
    Replace every vertex by k copies; copies of adjacent vertices are adjacent

    Args:
        G: A simple graph
        k: Number of copies, at least 1
        closed: Also join the copies of each vertex to one another

    Returns:
        nx.Graph: Graph over BlowupVertex with k*V vertices and k^2*E edges, plus
            C(k, 2)*V intra-copy edges when closed. `graph["k"]` and `graph["closed"]`
            record the parameters.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ConstructionError(f"Blowup multiplicity must be a positive integer, got {k!r}")
    validate_simple_graph(G)

    B = nx.Graph(k=k, closed=closed)
    vertices = sorted_vertices(G.nodes)
    B.add_nodes_from(BlowupVertex(v, i) for v in vertices for i in range(k))
    for u, v in sorted_edges(G.edges):
        B.add_edges_from((BlowupVertex(u, i), BlowupVertex(v, j)) for i in range(k) for j in range(k))
    if closed:
        for v in vertices:
            B.add_edges_from((BlowupVertex(v, i), BlowupVertex(v, j)) for i, j in combinations(range(k), 2))

    logger.debug(f"{'Closed' if closed else 'Open'} {k}-blowup: "
                 f"{B.number_of_nodes()} vertices, {B.number_of_edges()} edges")
    return B


def blowup_edge_count(n: int, m: int, k: int, closed: bool = False) -> int:
    """Closed-form edge count of a k-blowup of a graph with n vertices and m edges"""
    return k * k * m + (k * (k - 1) // 2 * n if closed else 0)


def base_graph(B: nx.Graph) -> nx.Graph:
    """Recover the base graph of a blowup (intra-copy edges are ignored)"""
    G = nx.Graph()
    G.add_nodes_from(sorted_vertices({x.base for x in B.nodes}))
    G.add_edges_from(sorted_edges({(x.base, y.base) for x, y in B.edges if x.base != y.base}))
    return G


def multiplicity(B: nx.Graph) -> int:
    if "k" in B.graph:
        return B.graph["k"]
    return 1 + max((x.copy for x in B.nodes), default=-1)


def is_closed(B: nx.Graph) -> bool:
    if "closed" in B.graph:
        return bool(B.graph["closed"])
    return any(x.base == y.base for x, y in B.edges)
