"""
Nested-quadrilateral drawing of the 2-blowup of an outerpath.

Every diagonal {u, v} of the strip becomes the 4-cycle u0 v0 u1 v1 carrying all four
copies of that edge. Consecutive quadrilaterals share the two copies of the common
diagonal endpoint, and the annulus between them carries two copies of the boundary
edge closing the triangle. Which two copies is fixed by the edge's type: type 0 joins
equal subscripts, type 1 opposite ones. The two ears sit inside the first and outside
the last quadrilateral.

Faces are produced as oriented cycles over slots (node, copy); the caller maps slots to
images and assembles the plane.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from decompositions.outerpath import Outerpath
from graph_core.graph import Vertex, edge_key
from utils.exceptions import DrawingError

logger = logging.getLogger(__name__)

Slot = Tuple[Vertex, int]
Cycle = Tuple[Slot, ...]
# face indices of two disjoint image triangles, twice
TrianglePairs = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass
class StripLayout:
    """
    Attributes:
        faces: Oriented face cycles over slots
        helper_edges: Slot pairs to delete once the plane is assembled
        quadrilaterals: The nested 4-cycles, innermost first
        triangle_pairs: Per outerpath triangle, two pairs of vertex-disjoint image
            triangles (None for an ear drawn without chords)
    """
    faces: List[Cycle] = field(default_factory=list)
    helper_edges: List[Tuple[Slot, Slot]] = field(default_factory=list)
    quadrilaterals: List[Cycle] = field(default_factory=list)
    triangle_pairs: List[Optional[TrianglePairs]] = field(default_factory=list)

    def add_face(self, *cycle: Slot) -> int:
        self.faces.append(tuple(cycle))
        return len(self.faces) - 1

    def insert_apex(self, face_index: int, apex: Slot) -> None:
        """Star a triangular face from a new slot"""
        a, b, c = self.faces[face_index]
        self.faces[face_index] = (a, b, apex)
        self.faces.append((b, c, apex))
        self.faces.append((c, a, apex))


def _rotate_to(cycle: Sequence[Slot], first: Slot) -> List[Slot]:
    i = list(cycle).index(first)
    return list(cycle[i:]) + list(cycle[:i])


def _ear_vertex(triangle, diagonal) -> Vertex:
    (e,) = set(triangle) - set(diagonal)
    return e


def _cap(layout: StripLayout, region: Sequence[Slot], ear: Vertex, diagonal,
         edge_type: Callable[[Vertex, Vertex], int], chords: bool) -> Optional[TrianglePairs]:
    """
    Place both copies of an ear vertex in the region bounded by `region`

    `region` lists the bounding quadrilateral so that the region lies on the same side
    as for a face cycle. e0 attaches to the side (x_tx, y_ty), e1 to the opposite side.
    """
    x, y = diagonal
    tx, ty = edge_type(ear, x), edge_type(ear, y)
    near = {(x, tx), (y, ty)}
    for i in range(4):
        r0, r1, r2, r3 = region[i:] + region[:i]
        if {r0, r1} == near:
            break
    else:
        raise DrawingError(f"Ear {ear!r} has no matching side on its quadrilateral")
    e0, e1 = (ear, 0), (ear, 1)

    first = layout.add_face(r0, r1, e0)
    second = layout.add_face(r2, r3, e1)
    if not chords:
        layout.add_face(r0, e0, r1, r2, e1, r3)
        return None
    third = layout.add_face(e0, r1, r2)
    fourth = layout.add_face(e1, r3, r0)
    layout.add_face(r0, e0, r2, e1)
    layout.helper_edges.extend([(e0, r2), (e1, r0)])
    return (first, second), (third, fourth)


def layout_strip(outerpath: Outerpath, edge_type: Callable[[Vertex, Vertex], int],
                 ear_chords: bool = False) -> StripLayout:
    """
    Lay out the 2-blowup of an outerpath as nested quadrilaterals

    Args:
        outerpath: Strip with at least two triangles
        edge_type: 0 or 1 for every boundary edge (a, b) of the strip
        ear_chords: Split each ear's leftover hexagon by two chords so the ear
            triangle also has four image triangles (the chords are helper edges)

    Returns:
        StripLayout: Faces over slots; each node has exactly two slots

    Raises:
        DrawingError: if the strip has a single triangle or a type is not 0 or 1
    """
    triangles, diagonals = outerpath.triangles, outerpath.diagonals
    if not diagonals:
        raise DrawingError("A strip with one triangle has no quadrilaterals to nest")

    def typed(a, b) -> int:
        tau = edge_type(a, b)
        if tau not in (0, 1):
            raise DrawingError(f"Boundary edge ({a!r}, {b!r}) has type {tau!r}")
        return tau

    layout = StripLayout(triangle_pairs=[None] * len(triangles))
    added = {frozenset(e) for e in outerpath.added_edges}

    u, v = diagonals[0]
    quad = [(u, 0), (v, 0), (u, 1), (v, 1)]
    layout.quadrilaterals.append(tuple(quad))

    for i in range(len(diagonals) - 1):
        current, following = diagonals[i], diagonals[i + 1]
        (s,) = set(current) & set(following)
        (a,) = set(current) - {s}
        (b,) = set(following) - {s}
        tau = typed(a, b)

        s0, alpha, s1, beta = _rotate_to(quad, (s, 0))
        gamma = (b, alpha[1] ^ tau)
        delta = (b, beta[1] ^ tau)
        f1 = layout.add_face(s0, gamma, alpha)
        f2 = layout.add_face(gamma, s1, alpha)
        f3 = layout.add_face(s0, beta, delta)
        f4 = layout.add_face(beta, s1, delta)
        layout.triangle_pairs[i + 1] = ((f1, f4), (f2, f3))

        quad = [s0, gamma, s1, delta]
        layout.quadrilaterals.append(tuple(quad))

    inner, outer = layout.quadrilaterals[0], layout.quadrilaterals[-1]
    layout.triangle_pairs[0] = _cap(layout, list(inner), _ear_vertex(triangles[0], diagonals[0]),
                                    diagonals[0], typed, ear_chords)
    layout.triangle_pairs[-1] = _cap(layout, list(reversed(outer)), _ear_vertex(triangles[-1], diagonals[-1]),
                                     diagonals[-1], typed, ear_chords)

    for quad_cycle, diagonal in zip(layout.quadrilaterals, diagonals):
        if frozenset(diagonal) in added:
            layout.helper_edges.extend((quad_cycle[j], quad_cycle[(j + 1) % 4]) for j in range(4))

    logger.debug(f"Strip layout: {len(layout.quadrilaterals)} quadrilaterals, {len(layout.faces)} faces, "
                 f"{len(layout.helper_edges)} helper edges")
    return layout


def boundary_types_by_appearance(outerpath: Outerpath,
                                 base: Callable[[Hashable], Vertex]) -> Dict[FrozenSet, int]:
    """
    Type 0 for the first boundary appearance of each base edge, 1 for the second

    Args:
        outerpath: Strip whose boundary edges map to base edges via `base`
        base: Node -> base vertex

    Raises:
        DrawingError: if a base edge appears more than twice on the boundary
    """
    boundary = outerpath.boundary
    seen: Dict = {}
    types: Dict[FrozenSet, int] = {}
    for i in range(len(boundary)):
        a, b = boundary[i], boundary[(i + 1) % len(boundary)]
        key = edge_key(base(a), base(b))
        count = seen.get(key, 0)
        if count > 1:
            raise DrawingError(f"Edge {key!r} appears more than twice on the strip boundary")
        types[frozenset((a, b))] = count
        seen[key] = count + 1
    return types
