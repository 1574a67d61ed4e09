"""
Rotation systems, face tracing and genus checks for sphere embeddings.

Faces are traced with the rule: the dart following (u, v) is (v, w) where w is the
successor of u in the rotation at v. A face is reported as its cyclic vertex sequence
(v0, ..., vL-1) with darts (vi, vi+1); along every face succ_{vi}(vi-1) = vi+1, which is
also the rule `rotation_from_faces` inverts.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

import networkx as nx

from graph_core.graph import Edge, Vertex, edge_key, sorted_edges, sorted_vertices, vertex_key
from utils.exceptions import GraphStructureError

logger = logging.getLogger(__name__)

Dart = Tuple[Vertex, Vertex]


@dataclass(frozen=True)
class Face:
    """A face as the cyclic sequence of its darts"""
    darts: Tuple[Dart, ...]

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(u for u, _ in self.darts)

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(edge_key(u, v) for u, v in self.darts)

    @property
    def is_simple(self) -> bool:
        """True if the boundary is a simple cycle of length at least three"""
        vertices = self.vertices
        return len(vertices) >= 3 and len(set(vertices)) == len(vertices)

    def __len__(self) -> int:
        return len(self.darts)


def _normalize(neighbors: Sequence[Vertex]) -> Tuple[Vertex, ...]:
    if not neighbors:
        return ()
    start = min(range(len(neighbors)), key=lambda i: vertex_key(neighbors[i]))
    return tuple(neighbors[start:]) + tuple(neighbors[:start])


class EmbeddedGraph:
    """
    A simple graph together with a rotation system.

    The rotation at each vertex is stored starting from its least neighbor, so two
    embeddings are equal exactly when their rotation systems agree cyclically.
    Instances are immutable; derived data (faces, the networkx view) is computed lazily.
    """

    def __init__(self, rotation: Mapping[Vertex, Sequence[Vertex]]):
        normalized: Dict[Vertex, Tuple[Vertex, ...]] = {}
        for v in sorted_vertices(rotation.keys()):
            neighbors = list(rotation[v])
            if len(set(neighbors)) != len(neighbors):
                raise GraphStructureError(f"Rotation at {v!r} repeats a neighbor: {neighbors!r}")
            if v in neighbors:
                raise GraphStructureError(f"Self-loop at vertex {v!r}")
            normalized[v] = _normalize(neighbors)

        for v, neighbors in normalized.items():
            for u in neighbors:
                if u not in normalized:
                    raise GraphStructureError(f"Rotation at {v!r} names unknown vertex {u!r}")
                if v not in normalized[u]:
                    raise GraphStructureError(f"Edge ({v!r}, {u!r}) missing from the rotation at {u!r}")

        self._rotation = normalized
        self._position = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in normalized.items()}

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_planar_embedding(cls, embedding: nx.PlanarEmbedding) -> "EmbeddedGraph":
        """Convert a networkx PlanarEmbedding (clockwise neighbor orders)"""
        return cls({v: list(embedding.neighbors_cw_order(v)) for v in embedding.nodes})

    def to_planar_embedding(self) -> nx.PlanarEmbedding:
        embedding = nx.PlanarEmbedding()
        embedding.set_data({v: list(nbrs) for v, nbrs in self._rotation.items()})
        return embedding

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def rotation(self) -> Mapping[Vertex, Tuple[Vertex, ...]]:
        return MappingProxyType(self._rotation)

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(self._rotation.keys())

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted_edges((v, u) for v, nbrs in self._rotation.items() for u in nbrs
                                  if vertex_key(v) < vertex_key(u)))

    @cached_property
    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self._rotation.keys())
        G.add_edges_from(self.edges)
        return nx.freeze(G)

    @property
    def num_vertices(self) -> int:
        return len(self._rotation)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: Vertex) -> int:
        return len(self._rotation[v])

    def neighbors(self, v: Vertex) -> Tuple[Vertex, ...]:
        return self._rotation[v]

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._position and v in self._position[u]

    def successor(self, v: Vertex, u: Vertex) -> Vertex:
        """Neighbor following u in the rotation at v"""
        nbrs = self._rotation[v]
        return nbrs[(self._position[v][u] + 1) % len(nbrs)]

    def predecessor(self, v: Vertex, u: Vertex) -> Vertex:
        nbrs = self._rotation[v]
        return nbrs[(self._position[v][u] - 1) % len(nbrs)]

    def darts(self) -> Iterator[Dart]:
        for v, nbrs in self._rotation.items():
            for u in nbrs:
                yield (v, u)

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        return trace_faces(self)

    @cached_property
    def face_of_dart(self) -> Mapping[Dart, int]:
        return MappingProxyType({dart: i for i, face in enumerate(self.faces) for dart in face.darts})

    # ------------------------------------------------------------------
    # Dunder methods
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(tuple(self._rotation.items()))

    def __repr__(self) -> str:
        return f"EmbeddedGraph(vertices={self.num_vertices}, edges={self.num_edges})"


def trace_faces(E: EmbeddedGraph) -> Tuple[Face, ...]:
    """
    Trace all faces of a rotation system

    Darts are visited in canonical order (vertices, then rotation order), so the face
    list is deterministic. Isolated vertices carry no darts and produce no face here.

    Args:
        E: The embedded graph

    Returns:
        Tuple[Face, ...]: Faces covering every dart exactly once
    """
    visited = set()
    faces: List[Face] = []
    for start in E.darts():
        if start in visited:
            continue
        darts = []
        u, v = start
        while (u, v) not in visited:
            visited.add((u, v))
            darts.append((u, v))
            u, v = v, E.successor(v, u)
        if (u, v) != start:
            raise GraphStructureError(f"Face walk from {start!r} did not close")
        faces.append(Face(tuple(darts)))
    logger.debug(f"Traced {len(faces)} faces over {2 * E.num_edges} darts")
    return tuple(faces)


def euler_genus_zero(E: EmbeddedGraph) -> bool:
    """
    Check V - E + F = 2 for every connected component

    An isolated vertex counts as a component with one face.
    """
    component_of = {}
    components = list(nx.connected_components(E.graph))
    for index, component in enumerate(components):
        for v in component:
            component_of[v] = index

    face_count = [0] * len(components)
    for face in E.faces:
        face_count[component_of[face.darts[0][0]]] += 1

    for index, component in enumerate(components):
        n = len(component)
        m = E.graph.subgraph(component).number_of_edges()
        f = face_count[index] if m else 1
        if n - m + f != 2:
            logger.debug(f"Component {index} has V - E + F = {n - m + f}")
            return False
    return True


def rotation_from_faces(faces: Iterable[Sequence[Vertex]],
                        isolated: Iterable[Vertex] = ()) -> EmbeddedGraph:
    """
    Assemble a rotation system from consistently oriented face cycles

    Each face (v0, ..., vL-1) contributes succ_{vi}(vi-1) = vi+1. Every dart must be used
    by exactly one face and the successor map at each vertex must form a single cycle.

    Args:
        faces: Vertex cycles of all faces
        isolated: Vertices without edges

    Returns:
        EmbeddedGraph: The embedding whose faces are exactly the given cycles

    Raises:
        GraphStructureError: if the cycles do not describe a rotation system
    """
    successor: Dict[Vertex, Dict[Vertex, Vertex]] = defaultdict(dict)
    darts = set()
    for face in faces:
        face = tuple(face)
        length = len(face)
        if length < 2:
            raise GraphStructureError(f"Face {face!r} is too short")
        for i in range(length):
            previous, current, following = face[i - 1], face[i], face[(i + 1) % length]
            if current == following:
                raise GraphStructureError(f"Self-loop at {current!r} in face {face!r}")
            if (current, following) in darts:
                raise GraphStructureError(f"Dart ({current!r}, {following!r}) used by two faces")
            darts.add((current, following))
            if previous in successor[current]:
                raise GraphStructureError(f"Corner ({previous!r}, {current!r}) used by two faces")
            successor[current][previous] = following

    for u, v in darts:
        if (v, u) not in darts:
            raise GraphStructureError(f"Dart ({u!r}, {v!r}) has no reverse dart")

    rotation: Dict[Vertex, List[Vertex]] = {}
    for v, succ in successor.items():
        start = min(succ, key=vertex_key)
        order = [start]
        nxt = succ[start]
        while nxt != start:
            if nxt not in succ or len(order) > len(succ):
                raise GraphStructureError(f"Link of {v!r} is not a single cycle")
            order.append(nxt)
            nxt = succ[nxt]
        if len(order) != len(succ):
            raise GraphStructureError(f"Link of {v!r} is not a single cycle")
        rotation[v] = order

    for v in isolated:
        if v in rotation:
            raise GraphStructureError(f"Vertex {v!r} is not isolated")
        rotation[v] = []

    return EmbeddedGraph(rotation)


def without_edges(E: EmbeddedGraph, edges: Iterable[Edge]) -> EmbeddedGraph:
    """Delete edges from an embedding; the remaining rotations are inherited"""
    removed = {frozenset(e) for e in edges}
    for e in removed:
        u, v = tuple(e)
        if not E.has_edge(u, v):
            raise GraphStructureError(f"Cannot delete missing edge ({u!r}, {v!r})")
    return EmbeddedGraph({
        v: [u for u in nbrs if frozenset((u, v)) not in removed]
        for v, nbrs in E.rotation.items()
    })


def relabel(E: EmbeddedGraph, mapping: Mapping[Vertex, Vertex]) -> EmbeddedGraph:
    """Rename vertices; the mapping must be injective on E's vertices"""
    images = [mapping[v] for v in E.vertices]
    if len(set(images)) != len(images):
        raise GraphStructureError("Relabelling is not injective")
    return EmbeddedGraph({mapping[v]: [mapping[u] for u in nbrs] for v, nbrs in E.rotation.items()})


def disjoint_union(embeddings: Iterable[EmbeddedGraph]) -> EmbeddedGraph:
    """Place embeddings side by side; vertex sets must be disjoint"""
    rotation: Dict[Vertex, Tuple[Vertex, ...]] = {}
    for E in embeddings:
        for v, nbrs in E.rotation.items():
            if v in rotation:
                raise GraphStructureError(f"Vertex {v!r} appears in two embeddings")
            rotation[v] = nbrs
    return EmbeddedGraph(rotation)
