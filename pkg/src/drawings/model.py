"""
Drawing data model: images of blowup vertices, plane drawings and layered drawings
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple

import networkx as nx

from constructions.blowup import BlowupVertex
from graph_core.embedding import EmbeddedGraph, euler_genus_zero, relabel, rotation_from_faces, without_edges
from utils.exceptions import DrawingError, GraphStructureError, InternalConsistencyError

logger = logging.getLogger(__name__)

THICKNESS = "thickness"
SPLIT = "split"


class ImageId(NamedTuple):
    """One occurrence of a blowup vertex in a drawing"""
    vertex: BlowupVertex
    occurrence: int


class DrawingKind(NamedTuple):
    """thickness(t): t planes, one image per plane; split(k): one plane, up to k images"""
    name: str
    value: int

    @classmethod
    def thickness(cls, t: int) -> "DrawingKind":
        return cls(THICKNESS, t)

    @classmethod
    def split(cls, k: int) -> "DrawingKind":
        return cls(SPLIT, k)

    @property
    def is_thickness(self) -> bool:
        return self.name == THICKNESS

    @property
    def is_split(self) -> bool:
        return self.name == SPLIT

    def __str__(self) -> str:
        return f"{self.name}({self.value})"


@dataclass(frozen=True)
class PlaneDrawing:
    """A sphere embedding whose vertices are ImageIds"""
    embedding: EmbeddedGraph

    @property
    def images(self) -> Tuple[ImageId, ...]:
        return self.embedding.vertices

    @property
    def edges(self) -> Tuple[Tuple[ImageId, ImageId], ...]:
        return self.embedding.edges

    @property
    def rotation(self) -> Mapping[ImageId, Tuple[ImageId, ...]]:
        return self.embedding.rotation


@dataclass(frozen=True, eq=False)
class LayeredDrawing:
    """
    One or more plane drawings realizing a target graph over BlowupVertex.

    Attributes:
        kind: thickness(t) or split(k)
        planes: The plane drawings
        target: The graph being drawn
        closed: The target is a closed blowup (intra-copy edges expected)
        metadata: Construction notes (strings, integers and tuples only)
    """
    kind: DrawingKind
    planes: Tuple[PlaneDrawing, ...]
    target: nx.Graph
    closed: bool = False
    metadata: Mapping[str, Any] = field(default_factory=dict)

    @property
    def num_images(self) -> int:
        return sum(len(plane.images) for plane in self.planes)

    @property
    def num_edges(self) -> int:
        return sum(len(plane.edges) for plane in self.planes)

    def images_of(self) -> Dict[BlowupVertex, List[Tuple[int, ImageId]]]:
        """Blowup vertex -> (plane index, image) for every image"""
        result: Dict[BlowupVertex, List[Tuple[int, ImageId]]] = {}
        for p, plane in enumerate(self.planes):
            for image in plane.images:
                result.setdefault(image.vertex, []).append((p, image))
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LayeredDrawing):
            return NotImplemented
        return (self.kind == other.kind and self.planes == other.planes and self.closed == other.closed
                and set(self.target.nodes) == set(other.target.nodes)
                and {frozenset(e) for e in self.target.edges} == {frozenset(e) for e in other.target.edges}
                and dict(self.metadata) == dict(other.metadata))

    def __hash__(self) -> int:
        return hash((self.kind, self.planes, self.closed))

    def __repr__(self) -> str:
        return (f"LayeredDrawing(kind={self.kind}, planes={len(self.planes)}, "
                f"images={self.num_images}, edges={self.num_edges})")


# ============================================================================
# Assembly helpers used by the constructors
# ============================================================================

def assemble_plane(faces: Iterable[Sequence[ImageId]], helper_edges: Iterable[Tuple[ImageId, ImageId]] = (),
                   isolated: Iterable[ImageId] = ()) -> PlaneDrawing:
    """
    Build a plane from oriented face cycles and delete helper edges

    Raises:
        InternalConsistencyError: if the faces do not form a sphere embedding
    """
    try:
        embedding = rotation_from_faces(faces, isolated=isolated)
    except GraphStructureError as e:
        raise InternalConsistencyError(f"Constructed faces are not a rotation system: {e}") from e
    if not euler_genus_zero(embedding):
        raise InternalConsistencyError("Constructed plane is not a sphere embedding")
    helpers = list(helper_edges)
    if helpers:
        embedding = without_edges(embedding, helpers)
    return PlaneDrawing(embedding)


def make_drawing(kind: DrawingKind, planes: Sequence[PlaneDrawing], target: nx.Graph,
                 closed: bool = False, **metadata) -> LayeredDrawing:
    for index, plane in enumerate(planes):
        if not euler_genus_zero(plane.embedding):
            raise InternalConsistencyError(f"Plane {index} is not a sphere embedding")
    drawing = LayeredDrawing(kind=kind, planes=tuple(planes), target=target, closed=closed,
                             metadata=dict(sorted(metadata.items())))
    logger.info(f"Built {drawing}")
    return drawing


# ============================================================================
# Operations on drawings
# ============================================================================

def biplanar_to_split2(drawing: LayeredDrawing) -> LayeredDrawing:
    """
    Merge the two planes of a thickness-2 drawing into one split-2 plane

    Occurrences are renumbered so the images of each blowup vertex are 0, 1, ... in
    plane order. A drawing with a single plane is returned unchanged.
    """
    if len(drawing.planes) == 1:
        return drawing
    if drawing.kind != DrawingKind.thickness(2):
        raise DrawingError(f"Expected a thickness-2 drawing, got {drawing.kind}")

    seen: Dict[BlowupVertex, int] = {}
    rotation: Dict[ImageId, List[ImageId]] = {}
    for plane in drawing.planes:
        mapping = {}
        for image in plane.images:
            mapping[image] = ImageId(image.vertex, seen.get(image.vertex, 0))
            seen[image.vertex] = seen.get(image.vertex, 0) + 1
        relabelled = relabel(plane.embedding, mapping)
        rotation.update({v: list(nbrs) for v, nbrs in relabelled.rotation.items()})

    merged = PlaneDrawing(EmbeddedGraph(rotation))
    return make_drawing(DrawingKind.split(2), [merged], drawing.target, drawing.closed,
                        **dict(drawing.metadata), merged_from=str(drawing.kind))


def restrict_drawing(drawing: LayeredDrawing, target: nx.Graph, closed: bool = None) -> LayeredDrawing:
    """
    Restrict a drawing to a subgraph of its target

    Images of vertices outside `target` are removed together with their edges, and
    image edges whose blowup pair is not an edge of `target` are deleted.
    """
    for u, v in target.edges:
        if not drawing.target.has_edge(u, v):
            raise DrawingError(f"Edge ({u!r}, {v!r}) is not in the drawing's target")
    planes = []
    for plane in drawing.planes:
        kept = {v: [u for u in nbrs if u.vertex in target and target.has_edge(u.vertex, v.vertex)]
                for v, nbrs in plane.rotation.items() if v.vertex in target}
        planes.append(PlaneDrawing(EmbeddedGraph(kept)))
    if closed is None:
        closed = drawing.closed and any(x.base == y.base for x, y in target.edges)
    return make_drawing(drawing.kind, planes, target, closed, **dict(drawing.metadata), restricted="yes")
