"""
Drawings built from outerpath strips: biplanar 2-blowups of two-outerpath
triangulations, split-2 drawings of their Kleetopes, and split-2 drawings from
path-copath decompositions.
"""

import logging
from typing import Callable, Dict, List, Union

from constructions.blowup import BlowupVertex, blowup
from constructions.kleetope import apex_level, apex_vertex, kleetope
from decompositions.path_copath import PathCopathDecomposition, cut_open
from decompositions.two_outerpath import TwoOuterpathDecomposition, check_two_outerpath
from drawings.model import DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, assemble_plane, make_drawing
from drawings.strips import Slot, StripLayout, boundary_types_by_appearance, layout_strip
from graph_core.embedding import EmbeddedGraph
from graph_core.planarity import is_maximal_planar
from utils.exceptions import DecompositionError, DrawingError
from utils.search import SearchResult

logger = logging.getLogger(__name__)


def unwrap(certificate, expected: type, what: str):
    """Accept a certificate or a FOUND SearchResult carrying one"""
    if isinstance(certificate, SearchResult):
        if not certificate.found:
            raise DrawingError(f"No {what} available ({certificate.status.value}: {certificate.reason})")
        certificate = certificate.certificate
    if not isinstance(certificate, expected):
        raise DrawingError(f"Expected a {what}, got {type(certificate).__name__}")
    return certificate


def _to_images(layout: StripLayout, image: Callable[[Slot], ImageId]):
    faces = [tuple(image(slot) for slot in face) for face in layout.faces]
    helpers = [(image(a), image(b)) for a, b in layout.helper_edges]
    return faces, helpers


def _checked_two_outerpath(E: EmbeddedGraph, decomposition) -> TwoOuterpathDecomposition:
    decomposition = unwrap(decomposition, TwoOuterpathDecomposition, "two-outerpath decomposition")
    try:
        check_two_outerpath(E, decomposition)
    except DecompositionError as e:
        raise DrawingError(f"Invalid two-outerpath decomposition: {e}") from e
    return decomposition


def draw_two_outerpath_biplanar(E: EmbeddedGraph,
                                decomposition: Union[TwoOuterpathDecomposition, SearchResult]) -> LayeredDrawing:
    """
    Biplanar drawing of the 2-blowup from a two-outerpath decomposition

    Plane p draws outerpath p as nested quadrilaterals; its Hamiltonian cycle edges
    get type p, so the two planes carry complementary copies of every cycle edge.

    Returns:
        LayeredDrawing: thickness(2) drawing of blowup(E, 2); images in plane p have
            occurrence p
    """
    decomposition = _checked_two_outerpath(E, decomposition)
    planes: List[PlaneDrawing] = []
    for p, outerpath in enumerate(decomposition.outerpaths):
        layout = layout_strip(outerpath, edge_type=lambda a, b, p=p: p)
        faces, helpers = _to_images(layout, lambda slot, p=p: ImageId(BlowupVertex(slot[0], slot[1]), p))
        planes.append(assemble_plane(faces, helpers))

    return make_drawing(DrawingKind.thickness(2), planes, blowup(E.graph, 2), construction="two-outerpath")


def draw_kleetope_split2(E: EmbeddedGraph,
                         decomposition: Union[TwoOuterpathDecomposition, SearchResult]) -> LayeredDrawing:
    """
    Split-2 drawing of the 2-blowup of the Kleetope of a triangulation

    Both planes of the biplanar drawing are laid out side by side, with every ear's
    leftover hexagon split by two helper chords. Each triangle of E then has four image
    triangles forming two vertex-disjoint pairs; the two images of apex copy c go into
    the triangles of pair c. The chords are removed afterwards.

    Returns:
        LayeredDrawing: split(2) drawing of blowup(kleetope(E), 2)
    """
    if not is_maximal_planar(E.graph):
        raise DrawingError("Kleetope drawings need a maximal planar graph")
    decomposition = _checked_two_outerpath(E, decomposition)
    level = 1 + max((apex_level(v) for v in E.vertices), default=0)
    faces_of_E = E.faces

    faces: List[tuple] = []
    helpers: List[tuple] = []
    for p, outerpath in enumerate(decomposition.outerpaths):
        layout = layout_strip(outerpath, edge_type=lambda a, b, p=p: p, ear_chords=True)
        apex_slots: Dict[Slot, int] = {}
        for t, pairs in enumerate(layout.triangle_pairs):
            w = apex_vertex(level, faces_of_E[outerpath.source_faces[t]].vertices)
            for copy, pair in enumerate(pairs):
                for occurrence, face_index in enumerate(pair):
                    slot = ((w, occurrence), copy)
                    apex_slots[slot] = occurrence
                    layout.insert_apex(face_index, slot)

        def image(slot, p=p) -> ImageId:
            node, copy = slot
            if slot in apex_slots:
                return ImageId(BlowupVertex(node[0], copy), node[1])
            return ImageId(BlowupVertex(node, copy), p)

        plane_faces, plane_helpers = _to_images(layout, image)
        faces.extend(plane_faces)
        helpers.extend(plane_helpers)

    plane = assemble_plane(faces, helpers)
    K = kleetope(E, level)
    return make_drawing(DrawingKind.split(2), [plane], blowup(K.graph, 2), construction="kleetope", apex_level=level)


def draw_path_copath_split2(E: EmbeddedGraph,
                            decomposition: Union[PathCopathDecomposition, SearchResult]) -> LayeredDrawing:
    """
    Split-2 drawing of the 2-blowup from a path-copath decomposition

    The sphere is cut open along the Hamiltonian path into a strip over appearance
    nodes (v, k). The strip is drawn as nested quadrilaterals in a single plane; each
    path edge appears twice on the strip boundary, with type 0 at its first appearance
    and type 1 at its second. Appearance k of v yields the images of occurrence k.

    Returns:
        LayeredDrawing: split(2) drawing of blowup(E, 2)
    """
    decomposition = unwrap(decomposition, PathCopathDecomposition, "path-copath decomposition")
    try:
        strip = cut_open(E, decomposition)
    except DecompositionError as e:
        raise DrawingError(f"Invalid path-copath decomposition: {e}") from e
    outerpath = strip.outerpath
    types = boundary_types_by_appearance(outerpath, base=lambda node: node[0])

    layout = layout_strip(outerpath, edge_type=lambda a, b: types[frozenset((a, b))])

    def image(slot) -> ImageId:
        (v, k), copy = slot
        return ImageId(BlowupVertex(v, copy), k)

    faces, helpers = _to_images(layout, image)
    plane = assemble_plane(faces, helpers)
    return make_drawing(DrawingKind.split(2), [plane], blowup(E.graph, 2), construction="path-copath",
                        appearances=sum(len(nodes) for nodes in strip.appearances.values()))
