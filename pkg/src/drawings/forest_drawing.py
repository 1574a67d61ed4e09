"""
Thickness drawings of closed 2-blowups from forest partitions
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from constructions.blowup import BlowupVertex, blowup
from decompositions.forests import ForestPartition, check_forest_partition, forest_partition
from drawings.model import DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, assemble_plane, make_drawing, \
    restrict_drawing
from drawings.outerpath_drawings import unwrap
from graph_core.graph import Vertex, sorted_vertices, vertex_key
from graph_core.planarity import is_planar_graph
from utils.exceptions import DecompositionError, DrawingError
from utils.search import SearchBudget, SearchResult

logger = logging.getLogger(__name__)

Slot = Tuple[Vertex, int]


def _tree_edges(T: nx.Graph, root: Vertex) -> List[Tuple[Vertex, Vertex]]:
    """(parent, child) pairs in breadth-first order with sorted neighbors"""
    edges = []
    seen = {root}
    queue = [root]
    while queue:
        v = queue.pop(0)
        for w in sorted(T.neighbors(v), key=vertex_key):
            if w not in seen:
                seen.add(w)
                edges.append((v, w))
                queue.append(w)
    return edges


def _find_dart(faces: List[Tuple[Slot, ...]], u: Slot, v: Slot) -> int:
    for index, face in enumerate(faces):
        for i in range(len(face)):
            if face[i] == u and face[(i + 1) % len(face)] == v:
                return index
    raise DrawingError(f"No face contains dart ({u!r}, {v!r})")


def _rotate_to(face, first):
    i = face.index(first)
    return face[i:] + face[:i]


def _tree_faces(T: nx.Graph, root: Vertex) -> List[Tuple[Slot, ...]]:
    """
    Faces of a plane drawing of the closed 2-blowup of a tree

    The first edge (x, y) becomes a K4 on x0, x1, y0, y1. Every further child z of a
    placed vertex x goes into the triangle on the dart x0 -> x1: z0 splits it, then z1
    is placed in the triangle (x0, x1, z0).
    """
    order = _tree_edges(T, root)
    x, y = order[0]
    a, b, c, d = (x, 0), (x, 1), (y, 0), (y, 1)
    faces: List[Tuple[Slot, ...]] = [(a, b, c), (a, c, d), (a, d, b), (b, d, c)]
    for parent, child in order[1:]:
        x0, x1, z0, z1 = (parent, 0), (parent, 1), (child, 0), (child, 1)
        index = _find_dart(faces, x0, x1)
        face = _rotate_to(faces[index], x0)
        if len(face) != 3:
            raise DrawingError(f"Expected a triangle on dart ({x0!r}, {x1!r}), got {face!r}")
        t = face[2]
        faces[index] = (x0, x1, z1)
        faces.extend([(x1, z0, z1), (z0, x0, z1), (z0, x1, t, x0)])
    return faces


def draw_forest_closed_blowup(G: nx.Graph, partition: Union[ForestPartition, SearchResult]) -> LayeredDrawing:
    """
    Thickness-a drawing of the closed 2-blowup from a partition into a forests

    Plane p draws the closed 2-blowup of every tree of forest p. The intra-copy edge
    v0 v1 is kept only in the lowest plane where v has an edge; elsewhere it is a
    helper removed after assembly. Vertices without edges get their intra-copy edge
    in plane 0.

    Returns:
        LayeredDrawing: thickness(a) drawing of blowup(G, 2, closed=True); images in
            plane p have occurrence p
    """
    partition = unwrap(partition, ForestPartition, "forest partition")
    try:
        check_forest_partition(G, partition)
    except DecompositionError as e:
        raise DrawingError(f"Invalid forest partition: {e}") from e
    if partition.size < 1:
        raise DrawingError("Forest partition has no parts")

    home: Dict[Vertex, int] = {}
    for p, forest in enumerate(partition.forests):
        for u, v in forest:
            home.setdefault(u, p)
            home.setdefault(v, p)
    isolated = [v for v in sorted_vertices(G.nodes) if v not in home]

    planes: List[PlaneDrawing] = []
    for p, forest in enumerate(partition.forests):
        T = nx.Graph()
        T.add_edges_from(forest)
        faces: List[Tuple[Slot, ...]] = []
        for component in sorted(nx.connected_components(T), key=lambda c: vertex_key(min(c, key=vertex_key))):
            faces.extend(_tree_faces(T, min(component, key=vertex_key)))
        helpers = [((v, 0), (v, 1)) for v in sorted_vertices(T.nodes) if home[v] != p]
        if p == 0:
            faces.extend(((v, 0), (v, 1)) for v in isolated)

        def image(slot, p=p) -> ImageId:
            return ImageId(BlowupVertex(slot[0], slot[1]), p)

        planes.append(assemble_plane([tuple(image(s) for s in face) for face in faces],
                                     [(image(u), image(v)) for u, v in helpers]))

    return make_drawing(DrawingKind.thickness(partition.size), planes, blowup(G, 2, closed=True), closed=True,
                        construction="forest")


def draw_bipartite_forest_biplanar(G: nx.Graph, budget: Optional[SearchBudget] = None) -> LayeredDrawing:
    """
    Biplanar drawing of the open 2-blowup of a planar bipartite graph

    A planar bipartite graph splits into two forests; the closed-blowup drawing of that
    partition is restricted to the open blowup.
    """
    if not nx.is_bipartite(G):
        raise DrawingError("Graph is not bipartite")
    if not is_planar_graph(G):
        raise DrawingError("Graph is not planar")
    result = forest_partition(G, 2, budget)
    closed = draw_forest_closed_blowup(G, result)
    return restrict_drawing(closed, blowup(G, 2), closed=False)
