"""
Drawings from proper colorings: k^2 copies of a plane embedding, one per pair (i, j)
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from constructions.blowup import BlowupVertex, blowup
from decompositions.coloring import ProperColoring, check_coloring
from drawings.model import DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, make_drawing
from drawings.outerpath_drawings import unwrap
from graph_core.embedding import EmbeddedGraph, disjoint_union, relabel
from graph_core.planarity import is_planar
from utils.exceptions import DecompositionError, DrawingError
from utils.search import SearchResult

logger = logging.getLogger(__name__)


def copy_index(color: int, i: int, j: int, k: int) -> int:
    """Copy used for a vertex of `color` in the copy labelled (i, j)"""
    if color == 0:
        return i
    if color == 1:
        return j
    return (-(i + j)) % k


def _prepare(G: nx.Graph, coloring, k: int, max_colors: int,
             embedding: Optional[EmbeddedGraph]) -> Tuple[ProperColoring, EmbeddedGraph]:
    coloring = unwrap(coloring, ProperColoring, "proper coloring")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DrawingError(f"Multiplicity must be a positive integer, got {k!r}")
    try:
        check_coloring(G, coloring)
    except DecompositionError as e:
        raise DrawingError(f"Invalid coloring: {e}") from e
    used = set(coloring.colors.values())
    if not used <= set(range(max_colors)):
        raise DrawingError(f"Coloring uses colors {sorted(used)}, expected a subset of range({max_colors})")
    if embedding is None:
        result = is_planar(G)
        if not result.planar:
            raise DrawingError("Graph is not planar")
        embedding = result.embedding
    elif set(embedding.vertices) != set(G.nodes) or set(map(frozenset, embedding.edges)) != set(
            map(frozenset, G.edges)):
        raise DrawingError("Embedding does not match the graph")
    return coloring, embedding


def _copy(embedding: EmbeddedGraph, coloring: ProperColoring, i: int, j: int, k: int,
          occurrence: Dict[BlowupVertex, int]) -> EmbeddedGraph:
    mapping = {}
    for v in embedding.vertices:
        vertex = BlowupVertex(v, copy_index(coloring.colors[v], i, j, k))
        mapping[v] = ImageId(vertex, occurrence.get(vertex, 0))
        occurrence[vertex] = occurrence.get(vertex, 0) + 1
    return relabel(embedding, mapping)


def draw_coloring_splitk(G: nx.Graph, coloring: Union[ProperColoring, SearchResult], k: int,
                         embedding: Optional[EmbeddedGraph] = None) -> LayeredDrawing:
    """
    Split-k drawing of the k-blowup of a 3-colorable planar graph

    The copy (i, j) maps colors 0, 1, 2 to copies i, j and -(i + j) mod k. For any
    two distinct colors the map (i, j) -> (copy, copy) is a bijection, so every blowup
    edge is drawn exactly once. Each vertex gets k images.

    Returns:
        LayeredDrawing: split(k) drawing of blowup(G, k) made of k^2 disjoint copies
    """
    coloring, embedding = _prepare(G, coloring, k, 3, embedding)
    occurrence: Dict[BlowupVertex, int] = {}
    copies = [_copy(embedding, coloring, i, j, k, occurrence) for i, j in product(range(k), repeat=2)]
    plane = PlaneDrawing(disjoint_union(copies))
    return make_drawing(DrawingKind.split(k), [plane], blowup(G, k), construction="coloring")


def draw_bipartite_thicknessk(G: nx.Graph, coloring: Union[ProperColoring, SearchResult], k: int,
                              embedding: Optional[EmbeddedGraph] = None) -> LayeredDrawing:
    """
    Thickness-k drawing of the k-blowup of a bipartite planar graph

    The copies (i, j) are grouped by the unused third color's index y = -(i + j) mod k;
    plane y holds the k copies of its group, so each blowup vertex appears once per
    plane.

    Returns:
        LayeredDrawing: thickness(k) drawing of blowup(G, k); occurrences equal the
            plane index
    """
    coloring, embedding = _prepare(G, coloring, k, 2, embedding)
    planes: List[PlaneDrawing] = []
    for y in range(k):
        copies = []
        for i in range(k):
            j = (-y - i) % k
            mapping = {v: ImageId(BlowupVertex(v, copy_index(coloring.colors[v], i, j, k)), y)
                       for v in embedding.vertices}
            copies.append(relabel(embedding, mapping))
        planes.append(PlaneDrawing(disjoint_union(copies)))
    return make_drawing(DrawingKind.thickness(k), planes, blowup(G, k), construction="bipartite")
