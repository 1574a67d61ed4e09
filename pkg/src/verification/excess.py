"""
Face excess accounting

The excess of a face is its length minus three. Components of one plane drawing share
a face, so every component beyond the first adds 6 and an isolated image, which lies on
no traced face, contributes -3. With this convention the total excess of a plane with
N images and M edges is 3N - 6 - M, independent of the drawing.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import networkx as nx
import pandas as pd

from drawings.model import DrawingKind, LayeredDrawing
from graph_core.embedding import euler_genus_zero
from utils.exceptions import InternalConsistencyError, VerificationError

logger = logging.getLogger(__name__)

FaceId = Tuple[int, int]


def max_edges(kind: DrawingKind, n: int) -> int:
    """
    Edge bound for a drawing kind on n vertices

    thickness(t): t(3n - 6); split(k): 3kn - 6 (one plane with kn images).
    """
    if n < 3:
        raise VerificationError(f"Edge bounds need at least 3 vertices, got {n}")
    if kind.is_thickness:
        return kind.value * (3 * n - 6)
    if kind.is_split:
        return 3 * kind.value * n - 6
    raise VerificationError(f"Unknown drawing kind {kind!r}")


@dataclass(frozen=True)
class ExcessReport:
    """
    Attributes:
        per_face_excess: (plane, face index) -> face length - 3
        total_excess: Face excess plus component corrections
        predicted_total: sum over planes of (3 N_p - 6) - m
        max_edges: Bound for the drawing kind and target size
        nontriangle_vertex_bound: 4 * total_excess
        component_excess: Component corrections alone
        nontriangle_images: Images incident to at least one non-triangular face
        formula_total: max_edges - m when every vertex has its full number of images
    """
    per_face_excess: Dict[FaceId, int]
    total_excess: int
    predicted_total: int
    max_edges: int
    nontriangle_vertex_bound: int
    component_excess: int
    nontriangle_images: int
    formula_total: Optional[int]

    def to_frame(self) -> pd.DataFrame:
        rows = [{"plane": p, "face": f, "excess": x} for (p, f), x in self.per_face_excess.items()]
        return pd.DataFrame(rows, columns=["plane", "face", "excess"])


def plane_components(drawing: LayeredDrawing, p: int) -> Tuple[int, int]:
    """(connected components, isolated images) of plane p"""
    graph = drawing.planes[p].embedding.graph
    components = nx.number_connected_components(graph)
    isolated = sum(1 for _, d in graph.degree if d == 0)
    return components, isolated


def _full_images(drawing: LayeredDrawing) -> bool:
    counts = {v: len(placed) for v, placed in drawing.images_of().items()}
    expected = drawing.kind.value if drawing.kind.is_split else len(drawing.planes)
    if drawing.kind.is_thickness and len(drawing.planes) != drawing.kind.value:
        return False
    return all(counts.get(v, 0) == expected for v in drawing.target.nodes)


def excess_report(drawing: LayeredDrawing) -> ExcessReport:
    """
    Compute the excess of every face and check it against the counting formula

    Raises:
        VerificationError: if a plane is not a sphere embedding
        InternalConsistencyError: if the traced total differs from the prediction
    """
    per_face: Dict[FaceId, int] = {}
    component_excess = 0
    predicted = 0
    nontriangle = 0
    for p, plane in enumerate(drawing.planes):
        embedding = plane.embedding
        if not euler_genus_zero(embedding):
            raise VerificationError(f"Plane {p} is not a sphere embedding")
        touched = set()
        for index, face in enumerate(embedding.faces):
            per_face[(p, index)] = face.length - 3
            if face.length != 3:
                touched.update(face.vertices)
        nontriangle += len(touched)
        components, isolated = plane_components(drawing, p)
        component_excess += 6 * (components - 1) - 3 * isolated
        predicted += 3 * embedding.num_vertices - 6

    m = drawing.target.number_of_edges()
    predicted -= m
    total = sum(per_face.values()) + component_excess
    if total != predicted:
        raise InternalConsistencyError(f"Total excess {total} differs from predicted {predicted}")

    n = drawing.target.number_of_nodes()
    bound = max_edges(drawing.kind, n) if n >= 3 else 0
    report = ExcessReport(
        per_face_excess=per_face,
        total_excess=total,
        predicted_total=predicted,
        max_edges=bound,
        nontriangle_vertex_bound=4 * total,
        component_excess=component_excess,
        nontriangle_images=nontriangle,
        formula_total=bound - m if n >= 3 and _full_images(drawing) else None,
    )
    logger.info(f"Excess of {drawing.kind} drawing: total {total}, {nontriangle} images on non-triangular faces")
    return report
