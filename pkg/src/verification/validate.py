"""
Validation of layered drawings against their target graph
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Tuple

from drawings.model import LayeredDrawing
from graph_core.embedding import euler_genus_zero
from graph_core.graph import edge_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_drawing; violations are listed in check order"""
    valid: bool
    violations: Tuple[str, ...] = ()

    @property
    def first_violation(self) -> Optional[str]:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.valid


def validate_drawing(drawing: LayeredDrawing) -> ValidationReport:
    """
    Check a layered drawing

    Checks, in order: every plane is a sphere embedding; no two drawn edges join the
    same pair of blowup vertices; every target edge is drawn exactly once and nothing
    else is drawn; image counts respect the drawing kind; open-blowup targets carry no
    intra-copy edges.

    Returns:
        ValidationReport: never raises for an invalid drawing
    """
    violations = []
    kind = drawing.kind
    target = drawing.target

    for p, plane in enumerate(drawing.planes):
        if not euler_genus_zero(plane.embedding):
            violations.append(f"genus: plane {p} is not a sphere embedding")

    drawn = Counter()
    for plane in drawing.planes:
        for a, b in plane.edges:
            drawn[edge_key(a.vertex, b.vertex)] += 1
    for pair, count in drawn.items():
        if count > 1:
            violations.append(f"repeated: {pair!r} is drawn {count} times")

    for u, v in target.edges:
        if drawn[edge_key(u, v)] == 0:
            violations.append(f"coverage: target edge ({u!r}, {v!r}) is not drawn")
    for (u, v), count in drawn.items():
        if not target.has_edge(u, v):
            violations.append(f"coverage: drawn edge ({u!r}, {v!r}) is not in the target")

    images = drawing.images_of()
    for vertex in images:
        if vertex not in target:
            violations.append(f"images: {vertex!r} is not a target vertex")
    for vertex in target.nodes:
        if vertex not in images:
            violations.append(f"images: {vertex!r} has no image")

    if kind.is_thickness:
        if len(drawing.planes) != kind.value:
            violations.append(f"images: {kind} drawing has {len(drawing.planes)} planes")
        for vertex, placed in images.items():
            per_plane = Counter(p for p, _ in placed)
            if any(count > 1 for count in per_plane.values()):
                violations.append(f"images: {vertex!r} has two images in one plane")
    elif kind.is_split:
        if len(drawing.planes) != 1:
            violations.append(f"images: {kind} drawing has {len(drawing.planes)} planes")
        for vertex, placed in images.items():
            if len(placed) > kind.value:
                violations.append(f"images: {vertex!r} has {len(placed)} images, more than {kind.value}")
    else:
        violations.append(f"kind: unknown drawing kind {kind!r}")

    if not drawing.closed:
        for u, v in target.edges:
            if u.base == v.base:
                violations.append(f"intra-copy: open target contains ({u!r}, {v!r})")
                break
        for pair in drawn:
            if pair[0].base == pair[1].base:
                violations.append(f"intra-copy: open drawing draws {pair!r}")
                break

    report = ValidationReport(not violations, tuple(violations))
    if report.valid:
        logger.info(f"Drawing valid: {drawing}")
    else:
        logger.warning(f"Drawing invalid ({len(violations)} violations): {report.first_violation}")
    return report
