"""
Simple graphs over opaque vertex ids, with a canonical vertex order
"""

import logging
from functools import lru_cache
from typing import Hashable, Iterable, List, Tuple

import networkx as nx

from utils.exceptions import GraphStructureError

logger = logging.getLogger(__name__)

Vertex = Hashable
Edge = Tuple[Vertex, Vertex]


@lru_cache(maxsize=None)
def vertex_key(v: Vertex) -> tuple:
    """
    Total order over the vertex ids used in the lab.

    Integers sort before strings, strings before tuples, and tuples (structured ids
    such as blowup vertices or Kleetope apexes) compare element-wise by the same rule.
    """
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    raise GraphStructureError(f"Unsupported vertex id type: {type(v).__name__} ({v!r})")


def sorted_vertices(vertices: Iterable[Vertex]) -> List[Vertex]:
    return sorted(vertices, key=vertex_key)


def edge_key(u: Vertex, v: Vertex) -> Edge:
    """Canonical orientation of an undirected edge (smaller endpoint first)"""
    return (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)


def sorted_edges(edges: Iterable[Edge]) -> List[Edge]:
    canonical = [edge_key(u, v) for u, v in edges]
    return sorted(canonical, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))


def validate_simple_graph(G: nx.Graph) -> None:
    """
    Check that G is a simple undirected graph

    Raises:
        GraphStructureError: on directed/multi graphs or self-loops
    """
    if G.is_directed() or G.is_multigraph():
        raise GraphStructureError("Expected a simple undirected graph")
    loops = list(nx.selfloop_edges(G))
    if loops:
        raise GraphStructureError(f"Self-loop at vertex {loops[0][0]!r}")


def graph_from_edges(vertices: Iterable[Vertex], edges: Iterable[Edge]) -> nx.Graph:
    """
    Build a simple graph, rejecting loops, repeated edges and undeclared endpoints

    Args:
        vertices: Declared vertex ids
        edges: Unordered vertex pairs

    Returns:
        nx.Graph: The graph, with vertices inserted in canonical order
    """
    G = nx.Graph()
    G.add_nodes_from(sorted_vertices(vertices))
    for u, v in edges:
        if u == v:
            raise GraphStructureError(f"Self-loop at vertex {u!r}")
        if u not in G or v not in G:
            missing = u if u not in G else v
            raise GraphStructureError(f"Edge ({u!r}, {v!r}) uses undeclared vertex {missing!r}")
        if G.has_edge(u, v):
            raise GraphStructureError(f"Repeated edge ({u!r}, {v!r})")
        G.add_edge(u, v)
    return G


def canonical_copy(G: nx.Graph) -> nx.Graph:
    """Copy of G with vertices and edges inserted in canonical order"""
    H = nx.Graph()
    H.add_nodes_from(sorted_vertices(G.nodes))
    H.add_edges_from(sorted_edges(G.edges))
    return H
