"""
Dual graphs of connected sphere embeddings
"""

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Tuple

import networkx as nx

from graph_core.embedding import EmbeddedGraph, Face
from graph_core.graph import Edge
from utils.exceptions import EmbeddingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualGraph:
    """
    Merged simple dual of an embedding.

    Attributes:
        graph: Simple graph over face indices
        faces: The primal faces, indexed as in `graph`
        primal_edges: For each dual edge (f, g) with f < g, the primal edges separating
            faces f and g; its length is the multiplicity of the merged dual edge
        edge_faces: For each non-bridge primal edge, the pair of faces it separates
    """
    graph: nx.Graph
    faces: Tuple[Face, ...]
    primal_edges: Mapping[Tuple[int, int], Tuple[Edge, ...]]
    edge_faces: Mapping[Edge, Tuple[int, int]]

    def multiplicity(self, f: int, g: int) -> int:
        return len(self.primal_edges.get((min(f, g), max(f, g)), ()))

    @property
    def total_multiplicity(self) -> int:
        return sum(len(edges) for edges in self.primal_edges.values())


def dual(E: EmbeddedGraph) -> DualGraph:
    """
    Build the dual graph

    Bridges (the same face on both sides) produce no dual edge; parallel dual edges are
    merged with their primal edges recorded.

    Raises:
        EmbeddingError: if E is empty or disconnected
    """
    if E.num_vertices == 0 or not nx.is_connected(E.graph):
        raise EmbeddingError("The dual is only defined here for connected embeddings")

    faces = E.faces
    face_of_dart = E.face_of_dart
    merged: Dict[Tuple[int, int], List[Edge]] = {}
    edge_faces: Dict[Edge, Tuple[int, int]] = {}
    for u, v in E.edges:
        f, g = face_of_dart[(u, v)], face_of_dart[(v, u)]
        if f == g:
            continue
        edge_faces[(u, v)] = (f, g)
        merged.setdefault((min(f, g), max(f, g)), []).append((u, v))

    graph = nx.Graph()
    graph.add_nodes_from(range(len(faces)))
    graph.add_edges_from(sorted(merged))
    logger.debug(f"Dual has {len(faces)} faces and {graph.number_of_edges()} merged edges")
    return DualGraph(
        graph=nx.freeze(graph),
        faces=faces,
        primal_edges=MappingProxyType({key: tuple(edges) for key, edges in sorted(merged.items())}),
        edge_faces=MappingProxyType(edge_faces),
    )


def dual_embedding(E: EmbeddedGraph) -> EmbeddedGraph:
    """
    The dual as an embedded graph: the rotation at a face lists the faces across its
    darts in boundary order

    Raises:
        EmbeddingError: if the dual has loops or parallel edges
    """
    rotation = {}
    for index, face in enumerate(E.faces):
        across = [E.face_of_dart[(v, u)] for u, v in face.darts]
        if index in across or len(set(across)) != len(across):
            raise EmbeddingError(f"Dual of face {index} is not simple")
        rotation[index] = across
    return EmbeddedGraph(rotation)
