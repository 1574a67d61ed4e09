"""
Tabular summaries of drawings
"""

import logging
from collections import Counter

import pandas as pd

from drawings.model import LayeredDrawing
from verification.excess import plane_components

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["plane", "images", "edges", "faces", "components", "isolated", "face_excess",
                   "excess", "max_face"]


def drawing_summary(drawing: LayeredDrawing) -> pd.DataFrame:
    """
    One row per plane: images, edges, faces, components and excess

    `excess` includes the component correction, so the column sums to the total
    excess of the drawing.
    """
    rows = []
    for p, plane in enumerate(drawing.planes):
        embedding = plane.embedding
        lengths = Counter(face.length for face in embedding.faces)
        face_excess = sum((length - 3) * count for length, count in lengths.items())
        components, isolated = plane_components(drawing, p)
        rows.append({
            "plane": p,
            "images": embedding.num_vertices,
            "edges": embedding.num_edges,
            "faces": sum(lengths.values()),
            "components": components,
            "isolated": isolated,
            "face_excess": face_excess,
            "excess": face_excess + 6 * (components - 1) - 3 * isolated,
            "max_face": max(lengths, default=0),
        })
    df = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
    logger.debug(f"Summary of {len(rows)} planes")
    return df
