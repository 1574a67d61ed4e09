"""
Straight-line SVG export of layered drawings.

Each connected component of a plane is stellated (a hub vertex inside every
non-triangular face). When that yields a simple triangulation, one triangle is pinned
to a regular triangle and every other vertex is placed at the barycenter of its
neighbors by solving the linear system with numpy. Components that do not stellate
into a simple triangulation (faces repeating a vertex) use networkx's planar layout of
the stored embedding. Hubs are dropped from the output.
"""

import logging
import math
import os
from typing import Dict, List, NamedTuple, Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx
import numpy as np
import seaborn as sns
from matplotlib.collections import LineCollection

from drawings.model import ImageId, LayeredDrawing
from graph_core.embedding import EmbeddedGraph
from graph_core.graph import sorted_vertices
from utils.config import ExportConfig, get_export_config
from utils.exceptions import VerificationError
from utils.helpers import ensure_directory
from verification.validate import validate_drawing

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

EPSILON = 1e-9


class _Hub(NamedTuple):
    face: int


def _component(E: EmbeddedGraph, vertices) -> EmbeddedGraph:
    return EmbeddedGraph({v: E.rotation[v] for v in vertices})


def _stellate(E: EmbeddedGraph) -> Optional[Tuple[nx.Graph, Tuple]]:
    """Triangulated augmentation and the triangle to pin, or None"""
    T = nx.Graph()
    T.add_nodes_from(E.vertices)
    T.add_edges_from(E.edges)
    outer = None
    for index, face in enumerate(E.faces):
        if not face.is_simple:
            return None
        if face.length == 3:
            outer = outer or face.vertices
            continue
        hub = _Hub(index)
        T.add_edges_from((hub, v) for v in face.vertices)
        outer = outer or (face.vertices[0], face.vertices[1], hub)
    n = T.number_of_nodes()
    if n > 3 and T.number_of_edges() != 3 * n - 6:
        return None
    return T, outer


def tutte_positions(T: nx.Graph, outer: Tuple, radius: float = 1.0) -> Dict:
    """Barycentric placement with `outer` pinned to a regular triangle"""
    pinned = {}
    for i, v in enumerate(outer):
        angle = math.pi / 2 + 2 * math.pi * i / 3
        pinned[v] = np.array([radius * math.cos(angle), radius * math.sin(angle)])
    interior = [v for v in T.nodes if v not in pinned]
    index = {v: i for i, v in enumerate(interior)}

    A = np.zeros((len(interior), len(interior)))
    b = np.zeros((len(interior), 2))
    for i, v in enumerate(interior):
        A[i, i] = T.degree(v)
        for u in T.neighbors(v):
            if u in pinned:
                b[i] += pinned[u]
            else:
                A[i, index[u]] -= 1.0
    solution = np.linalg.solve(A, b) if interior else np.zeros((0, 2))

    positions = {v: (float(x), float(y)) for v, (x, y) in pinned.items()}
    positions.update({v: (float(solution[i, 0]), float(solution[i, 1])) for i, v in enumerate(interior)})
    return positions


def _component_positions(C: EmbeddedGraph, radius: float) -> Dict:
    n = C.num_vertices
    if n == 1:
        return {C.vertices[0]: (0.0, 0.0)}
    if n == 2:
        return {C.vertices[0]: (-radius / 2, 0.0), C.vertices[1]: (radius / 2, 0.0)}
    stellated = _stellate(C)
    if stellated is not None:
        T, outer = stellated
        positions = tutte_positions(T, outer, radius)
    else:
        logger.debug(f"Component with {n} vertices does not stellate; using planar_layout")
        positions = nx.planar_layout(C.to_planar_embedding(), scale=radius)
    return {v: tuple(positions[v]) for v in C.vertices}


def plane_positions(E: EmbeddedGraph, radius: float = 1.0) -> Dict:
    """Coordinates for every vertex of a plane; components are placed side by side"""
    positions: Dict = {}
    components = sorted((sorted_vertices(c) for c in nx.connected_components(E.graph)), key=lambda c: len(c),
                        reverse=True)
    offset = 0.0
    for vertices in components:
        local = _component_positions(_component(E, vertices), radius)
        xs = [x for x, _ in local.values()]
        shift = offset - min(xs)
        positions.update({v: (x + shift, y) for v, (x, y) in local.items()})
        offset += (max(xs) - min(xs)) + radius / 2
    return positions


def _orientation(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    d1, d2 = _orientation(q1, q2, p1), _orientation(q1, q2, p2)
    d3, d4 = _orientation(p1, p2, q1), _orientation(p1, p2, q2)
    if ((d1 > EPSILON and d2 < -EPSILON) or (d1 < -EPSILON and d2 > EPSILON)) and \
            ((d3 > EPSILON and d4 < -EPSILON) or (d3 < -EPSILON and d4 > EPSILON)):
        return True
    return False


def crossing_pairs(E: EmbeddedGraph, positions: Dict) -> List[Tuple]:
    """Pairs of vertex-disjoint edges whose segments cross"""
    edges = list(E.edges)
    crossings = []
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if {a, b} & {c, d}:
                continue
            if _segments_cross(positions[a], positions[b], positions[c], positions[d]):
                crossings.append(((a, b), (c, d)))
    return crossings


def _label(image: ImageId) -> str:
    base = image.vertex.base
    if isinstance(base, tuple):
        base = "*"
    return f"{base}.{image.vertex.copy}" + "'" * image.occurrence


def export_svg(drawing: LayeredDrawing, path: str, export: Optional[ExportConfig] = None) -> str:
    """
    Render every plane of a valid drawing side by side into one SVG file

    Raises:
        VerificationError: if the drawing does not validate
    """
    report = validate_drawing(drawing)
    if not report.valid:
        raise VerificationError(f"Refusing to export an invalid drawing: {report.first_violation}")
    export = export or get_export_config()
    plt.rcParams["svg.hashsalt"] = export.hash_salt

    count = max(len(drawing.planes), 1)
    colors = sns.color_palette(export.palette, count)
    fig, axes = plt.subplots(1, count, figsize=(export.plane_width_inches * count, export.plane_height_inches),
                             squeeze=False)
    for p, plane in enumerate(drawing.planes):
        ax = axes[0][p]
        positions = plane_positions(plane.embedding, export.outer_radius)
        crossings = crossing_pairs(plane.embedding, positions)
        if crossings:
            logger.warning(f"Plane {p}: {len(crossings)} crossing edge pairs in the layout")
        segments = [(positions[a], positions[b]) for a, b in plane.edges]
        ax.add_collection(LineCollection(segments, colors=[colors[p]], linewidths=export.edge_width))
        images = list(plane.images)
        if images:
            ax.scatter([positions[v][0] for v in images], [positions[v][1] for v in images],
                       s=export.vertex_size, color=colors[p], zorder=3)
        if export.show_labels:
            for v in images:
                ax.annotate(_label(v), positions[v], fontsize=5, ha="center", va="bottom")
        ax.set_title(f"plane {p}: {plane.embedding.num_edges} edges")
        ax.set_aspect("equal")
        ax.autoscale()
        ax.axis("off")

    fig.suptitle(f"{drawing.kind} drawing of {drawing.target.number_of_nodes()} vertices")
    ensure_directory(os.path.dirname(path) or ".")
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info(f"Exported {len(drawing.planes)} plane(s) to {path}")
    return path

