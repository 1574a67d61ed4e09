"""
Neighborhood detectors on drawings of 2-blowups, and the exhaustive check of the
triangle partitions of the octahedron's graph.

Face incidence is read from the rotation systems only.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from constructions.blowup import BlowupVertex, base_graph, multiplicity
from constructions.generators import complete_multipartite
from drawings.model import ImageId, LayeredDrawing
from graph_core.embedding import EmbeddedGraph
from graph_core.graph import Vertex, edge_key, sorted_vertices
from graph_core.planarity import is_maximal_planar
from utils.exceptions import InternalConsistencyError, VerificationError

logger = logging.getLogger(__name__)

BIPLANAR_THRESHOLD = 49
SPLIT2_THRESHOLD = 73


def _incident_faces(embedding: EmbeddedGraph, image: ImageId) -> List[int]:
    """Face index at every corner of `image` (one entry per incident dart)"""
    return [embedding.face_of_dart[(image, u)] for u in embedding.neighbors(image)]


def _only_triangles(embedding: EmbeddedGraph, image: ImageId) -> bool:
    faces = _incident_faces(embedding, image)
    return bool(faces) and all(embedding.faces[f].length == 3 for f in faces)


@dataclass(frozen=True)
class TriangulatedNeighborhoods:
    """
    Attributes:
        vertices: Base vertices all of whose images touch only triangles
        threshold: Base size from which the set must be nonempty (None for other kinds)
        threshold_applies: The base graph is maximal planar and at least that large
    """
    vertices: Tuple[Vertex, ...]
    threshold: Optional[int]
    threshold_applies: bool


def _require_2_blowup(drawing: LayeredDrawing) -> None:
    if multiplicity(drawing.target) != 2:
        raise VerificationError("Neighborhood checks need a drawing of a 2-blowup")


def triangulated_neighborhoods(drawing: LayeredDrawing) -> TriangulatedNeighborhoods:
    """
    Base vertices whose every image (of both copies) is incident only to triangles

    For a maximal planar base graph the excess bound forces such a vertex once the base
    has at least 49 vertices in a biplanar drawing, or 73 in a split-2 drawing.

    Raises:
        VerificationError: if the target is not a 2-blowup
        InternalConsistencyError: if the bound applies but no vertex qualifies
    """
    _require_2_blowup(drawing)
    by_base: Dict[Vertex, List[Tuple[int, ImageId]]] = {}
    for vertex, placed in drawing.images_of().items():
        by_base.setdefault(vertex.base, []).extend(placed)

    found = tuple(
        v for v in sorted_vertices(by_base)
        if all(_only_triangles(drawing.planes[p].embedding, image) for p, image in by_base[v])
    )

    kind = drawing.kind
    threshold = None
    if kind.is_thickness and kind.value == 2:
        threshold = BIPLANAR_THRESHOLD
    elif kind.is_split and kind.value == 2:
        threshold = SPLIT2_THRESHOLD
    base = base_graph(drawing.target)
    applies = threshold is not None and base.number_of_nodes() >= threshold and is_maximal_planar(base)
    if applies and not found:
        raise InternalConsistencyError("No vertex with triangulated neighborhoods despite the excess bound")

    logger.info(f"{len(found)} of {len(by_base)} base vertices have triangulated neighborhoods")
    return TriangulatedNeighborhoods(found, threshold, applies)


@dataclass(frozen=True)
class NeighborhoodReport:
    """
    Attributes:
        vertex: Base vertex inspected
        images: Its images as (plane, image)
        triangulated: Per image, every incident face is a triangle
        triangular: Per image, exactly three incident faces, all triangles
        shared_edges: Edges common to two fans, summed over unordered image pairs
    """
    vertex: Vertex
    images: Tuple[Tuple[int, ImageId], ...]
    triangulated: Dict[ImageId, bool]
    triangular: Dict[ImageId, bool]
    shared_edges: int

    @property
    def all_triangular(self) -> bool:
        return all(self.triangular.values())


def _fan(embedding: EmbeddedGraph, image: ImageId) -> FrozenSet:
    """Blowup-vertex pairs of the edges of the three triangles around a triangular image"""
    edges = set()
    for f in _incident_faces(embedding, image):
        for a, b in embedding.faces[f].darts:
            edges.add(edge_key(a.vertex, b.vertex))
    return frozenset(edges)


def triangular_neighborhood_report(drawing: LayeredDrawing, w: Vertex) -> NeighborhoodReport:
    """
    Inspect the images of a degree-3 base vertex

    Images that are not triangular have an empty fan, so `shared_edges` only counts
    overlaps between three-triangle fans.

    Raises:
        VerificationError: if w is not a degree-3 vertex of the base graph
    """
    _require_2_blowup(drawing)
    base = base_graph(drawing.target)
    if w not in base or base.degree(w) != 3:
        raise VerificationError(f"Vertex {w!r} is not a degree-3 vertex of the base graph")

    images = []
    for copy in (0, 1):
        images.extend(sorted(drawing.images_of().get(BlowupVertex(w, copy), [])))

    triangulated: Dict[ImageId, bool] = {}
    triangular: Dict[ImageId, bool] = {}
    fans: Dict[ImageId, FrozenSet] = {}
    for p, image in images:
        embedding = drawing.planes[p].embedding
        triangulated[image] = _only_triangles(embedding, image)
        triangular[image] = triangulated[image] and embedding.degree(image) == 3
        fans[image] = _fan(embedding, image) if triangular[image] else frozenset()

    shared = sum(len(fans[a] & fans[b]) for (_, a), (_, b) in combinations(images, 2))
    return NeighborhoodReport(w, tuple(images), triangulated, triangular, shared)


# ============================================================================
# Triangle partitions of K_{2,2,2}
# ============================================================================

@dataclass(frozen=True)
class OctahedronPartitionReport:
    """
    Attributes:
        partitions: Every set of four triangles partitioning the edges
        candidates_checked: Number of four-subsets examined
        pairs_share_vertex: In every partition, each two triangles share a vertex
        pairs_cover_five: In every partition, each two triangles cover exactly five vertices
        covering_assignments: Splits of a partition into two pairs where each pair
            covers all six vertices (summed over partitions)
    """
    partitions: Tuple[Tuple[Tuple[Vertex, ...], ...], ...]
    candidates_checked: int
    pairs_share_vertex: bool
    pairs_cover_five: bool
    covering_assignments: int


def _pair_splits(items):
    first, *rest = items
    for partner in rest:
        others = tuple(x for x in rest if x != partner)
        yield (first, partner), others


def octahedron_triangle_partitions() -> OctahedronPartitionReport:
    """
    Enumerate all four-subsets of the eight triangles of K_{2,2,2} that partition its
    twelve edges, and check their pairwise overlaps

    Two images of a degree-3 vertex whose neighborhoods are edge-disjoint triangles
    would need a pair of such triangles covering all six neighbors; the report records
    that no partition allows this.

    Raises:
        InternalConsistencyError: if a partition violates the sharing properties
    """
    G = complete_multipartite(2, 2, 2)
    edges = {edge_key(u, v) for u, v in G.edges}
    triangles = sorted(tuple(sorted(t)) for t in (
        (a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)
    ))
    if any(not all(G.has_edge(x, y) for x, y in combinations(t, 2)) for t in triangles):
        raise InternalConsistencyError("Octahedron triangles do not match the graph")

    partitions = []
    checked = 0
    for subset in combinations(triangles, 4):
        checked += 1
        covered = [edge_key(x, y) for t in subset for x, y in combinations(t, 2)]
        if len(covered) == len(set(covered)) and set(covered) == edges:
            partitions.append(subset)

    share = all(set(a) & set(b) for part in partitions for a, b in combinations(part, 2))
    five = all(len(set(a) | set(b)) == 5 for part in partitions for a, b in combinations(part, 2))
    covering = sum(
        1 for part in partitions for pair, others in _pair_splits(part)
        if len(set(pair[0]) | set(pair[1])) == 6 and len(set(others[0]) | set(others[1])) == 6
    )
    if not (share and five) or covering:
        raise InternalConsistencyError("A triangle partition of K_{2,2,2} violates the sharing properties")

    logger.info(f"Checked {checked} four-subsets; {len(partitions)} partition the edges")
    return OctahedronPartitionReport(tuple(partitions), checked, share, five, covering)
