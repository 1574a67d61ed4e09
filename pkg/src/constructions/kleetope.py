"""
Kleetopes: one apex vertex per face, joined to the face's vertices
"""

import logging
from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple

import networkx as nx

from graph_core.embedding import EmbeddedGraph, euler_genus_zero, rotation_from_faces
from graph_core.graph import Vertex, vertex_key
from utils.exceptions import ConstructionError, InternalConsistencyError

logger = logging.getLogger(__name__)

APEX = "apex"


@dataclass(frozen=True)
class KleetopeVertexTag:
    """Decoded vertex id: an original vertex, or the apex of a face at some level"""
    kind: str
    vertex: Hashable
    level: int = 0
    face: Tuple[Hashable, ...] = ()

    @property
    def is_apex(self) -> bool:
        return self.kind == APEX


def face_key(cycle: Sequence[Vertex]) -> Tuple[Vertex, ...]:
    """Least cyclic rotation of a face's vertex cycle"""
    rotations = [tuple(cycle[i:]) + tuple(cycle[:i]) for i in range(len(cycle))]
    return min(rotations, key=lambda r: tuple(vertex_key(v) for v in r))


def apex_vertex(level: int, cycle: Sequence[Vertex]) -> tuple:
    return (APEX, level, face_key(cycle))


def is_apex(v: Vertex) -> bool:
    return isinstance(v, tuple) and len(v) == 3 and v[0] == APEX


def vertex_tag(v: Vertex) -> KleetopeVertexTag:
    if is_apex(v):
        return KleetopeVertexTag(APEX, v, level=v[1], face=v[2])
    return KleetopeVertexTag("original", v)


def apex_level(v: Vertex) -> int:
    return vertex_tag(v).level


def kleetope(E: EmbeddedGraph, level: Optional[int] = None) -> EmbeddedGraph:
    """
    Add an apex inside every face, adjacent to all vertices of that face

    Every face (v0, ..., vL-1) is replaced by the triangles (vi, vi+1, apex), so the
    rotation at vi gets the apex spliced between its two face neighbors and the apex's
    rotation is the reversed face cycle.

    Args:
        E: Embedding whose faces are all simple cycles
        level: Iteration level recorded in apex ids (default: one above the highest
            level already present)

    Returns:
        EmbeddedGraph: The Kleetope, again a sphere embedding

    Raises:
        ConstructionError: on faces with repeated vertices or isolated vertices
    """
    if E.num_vertices == 0 or any(E.degree(v) == 0 for v in E.vertices):
        raise ConstructionError("Kleetope input must have no isolated vertices")
    if level is None:
        level = 1 + max((apex_level(v) for v in E.vertices), default=0)

    triangles: List[Tuple[Vertex, Vertex, Vertex]] = []
    for face in E.faces:
        if not face.is_simple:
            raise ConstructionError(f"Face {face.vertices!r} is not a simple cycle")
        cycle = face.vertices
        apex = apex_vertex(level, cycle)
        if apex in E.rotation:
            raise ConstructionError(f"Apex id {apex!r} already in use")
        triangles.extend((cycle[i], cycle[(i + 1) % len(cycle)], apex) for i in range(len(cycle)))

    result = rotation_from_faces(triangles)
    if not euler_genus_zero(result):
        raise InternalConsistencyError("Kleetope lost genus zero")
    logger.debug(f"Kleetope at level {level}: {E.num_vertices} -> {result.num_vertices} vertices")
    return result


def iterated_kleetope(E: EmbeddedGraph, iterations: int) -> EmbeddedGraph:
    """Apply the Kleetope operation `iterations` times; iteration j uses level base + j"""
    if iterations < 0:
        raise ConstructionError(f"Number of iterations must be nonnegative, got {iterations}")
    base = max((apex_level(v) for v in E.vertices), default=0)
    for j in range(1, iterations + 1):
        E = kleetope(E, level=base + j)
    return E


def minimum_edge_weight(G: nx.Graph) -> int:
    """Minimum over edges uv of deg(u) + deg(v)"""
    if G.number_of_edges() == 0:
        raise ConstructionError("Edge weight of an edgeless graph is undefined")
    return min(G.degree(u) + G.degree(v) for u, v in G.edges)


def kleetope_vertex_counts(n: int, iterations: int) -> List[int]:
    """Vertex counts of iterated Kleetopes of a maximal planar graph: n -> 3n - 4"""
    counts = [n]
    for _ in range(iterations):
        counts.append(3 * counts[-1] - 4)
    return counts
