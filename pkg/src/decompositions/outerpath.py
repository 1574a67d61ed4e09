"""
Outerpaths: triangulated strips of faces whose weak dual is a path.

A strip is given as an ordered list of faces (vertex cycles oriented as in the ambient
embedding) in which consecutive faces share exactly one edge. Each face is cut into
triangles by a "ladder": starting from the edge shared with the previous face, the
current diagonal (l, r) advances either its right end forward along the face or its
left end backward, until it reaches the edge shared with the next face. The end that
the entry edge shares with the previous diagonal stays fixed for as long as possible,
so each face becomes a fan from that vertex followed by a fan from the other end.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple

from graph_core.graph import Edge, Vertex, edge_key, vertex_key
from utils.exceptions import DecompositionError

logger = logging.getLogger(__name__)

Triangle = Tuple[Vertex, Vertex, Vertex]


def shared_edge(a: Triangle, b: Triangle) -> Optional[Edge]:
    common = set(a) & set(b)
    if len(common) != 2:
        return None
    u, v = common
    return edge_key(u, v)


@dataclass(frozen=True)
class Outerpath:
    """
    A triangulated strip.

    Attributes:
        boundary: Cyclic sequence of boundary vertices, following the strip's
            orientation
        triangles: Ordered triangles, each oriented consistently with the embedding
        diagonals: Edge shared by triangles i and i+1, for each i
        ears: First and last triangle
        added_edges: Diagonals introduced by triangulation (absent from the graph)
        source_faces: For each triangle, the index of the strip face it came from
    """
    boundary: Tuple[Vertex, ...]
    triangles: Tuple[Triangle, ...]
    diagonals: Tuple[Edge, ...]
    ears: Tuple[Triangle, Triangle]
    added_edges: FrozenSet[Edge] = field(default_factory=frozenset)
    source_faces: Tuple[int, ...] = ()

    @property
    def boundary_edges(self) -> FrozenSet[Edge]:
        n = len(self.boundary)
        return frozenset(edge_key(self.boundary[i], self.boundary[(i + 1) % n]) for i in range(n))

    @property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(edge_key(t[i], t[(i + 1) % 3]) for t in self.triangles for i in range(3))

    def check(self) -> None:
        """
        Verify the outerpath invariants

        Raises:
            DecompositionError: if the weak dual is not a path or diagonals are inconsistent
        """
        if not self.triangles:
            raise DecompositionError("Outerpath has no triangles")
        for t in self.triangles:
            if len(set(t)) != 3:
                raise DecompositionError(f"Degenerate triangle {t!r}")
        if len(self.diagonals) != len(self.triangles) - 1:
            raise DecompositionError("Diagonal count does not match triangle count")
        for i, diagonal in enumerate(self.diagonals):
            if shared_edge(self.triangles[i], self.triangles[i + 1]) != diagonal:
                raise DecompositionError(f"Triangles {i} and {i + 1} do not share diagonal {diagonal!r}")
        for first, second in zip(self.diagonals, self.diagonals[1:]):
            if len(set(first) & set(second)) != 1:
                raise DecompositionError(f"Diagonals {first!r} and {second!r} do not share one endpoint")
        internal = set(self.diagonals)
        if len(internal) != len(self.diagonals):
            raise DecompositionError("A diagonal is shared by non-consecutive triangles")
        for i, a in enumerate(self.triangles):
            for b in self.triangles[i + 2:]:
                if shared_edge(a, b) is not None:
                    raise DecompositionError(f"Non-consecutive triangles {a!r} and {b!r} share an edge")
        if self.boundary_edges & internal:
            raise DecompositionError("A diagonal lies on the boundary")


def _face_darts(cycle: Sequence[Vertex]) -> List[Tuple[Vertex, Vertex]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def _locate(cycle: Sequence[Vertex], edge: Edge) -> int:
    """Index j with {cycle[j], cycle[j+1]} == edge"""
    target = frozenset(edge)
    for j, dart in enumerate(_face_darts(cycle)):
        if frozenset(dart) == target:
            return j
    raise DecompositionError(f"Edge {edge!r} is not on face {tuple(cycle)!r}")


def _ladder(cycle: Sequence[Vertex], entry: int, exit_: int, pivot_left: bool) -> List[Triangle]:
    """
    Triangulate one face between entry dart index and exit dart index

    The diagonal (l, r) starts at the entry dart and ends at the exit dart reversed.
    With pivot_left the left end l stays fixed while the right chain is consumed.
    """
    length = len(cycle)
    right_steps = (exit_ - entry - 1) % length
    left_steps = length - 2 - right_steps
    l, r = entry, (entry + 1) % length
    triangles: List[Triangle] = []

    def advance_right():
        nonlocal r
        nxt = (r + 1) % length
        triangles.append((cycle[l], cycle[r], cycle[nxt]))
        r = nxt

    def advance_left():
        nonlocal l
        prv = (l - 1) % length
        triangles.append((cycle[prv], cycle[l], cycle[r]))
        l = prv

    first, second = (advance_right, advance_left) if pivot_left else (advance_left, advance_right)
    first_steps, second_steps = (right_steps, left_steps) if pivot_left else (left_steps, right_steps)
    for _ in range(first_steps):
        first()
    for _ in range(second_steps):
        second()
    return triangles


def _boundary_cycle(triangles: Sequence[Triangle]) -> Tuple[Vertex, ...]:
    darts = {(t[i], t[(i + 1) % 3]) for t in triangles for i in range(3)}
    following = {}
    for u, v in darts:
        if (v, u) not in darts:
            if u in following:
                raise DecompositionError(f"Boundary of the strip passes {u!r} twice")
            following[u] = v
    if not following:
        raise DecompositionError("Strip has no boundary")
    start = min(following, key=vertex_key)
    boundary = [start]
    nxt = following[start]
    while nxt != start:
        boundary.append(nxt)
        nxt = following[nxt]
        if len(boundary) > len(following):
            raise DecompositionError("Strip boundary is not a single cycle")
    if len(boundary) != len(following):
        raise DecompositionError("Strip boundary is not a single cycle")
    return tuple(boundary)


def triangulate_outerpath(faces: Sequence[Sequence[Vertex]],
                          links: Optional[Sequence[Edge]] = None,
                          source_faces: Optional[Sequence[int]] = None) -> Outerpath:
    """
    Triangulate a strip of faces into an outerpath

    Args:
        faces: Ordered face cycles; consecutive faces share exactly one edge
        links: The shared edge between faces i and i+1 (computed when omitted)
        source_faces: Labels recorded per triangle (defaults to positions in `faces`)

    Returns:
        Outerpath: Triangles in strip order; `added_edges` holds the new diagonals

    Raises:
        DecompositionError: if the strip cannot be triangulated into an outerpath
    """
    faces = [tuple(f) for f in faces]
    if not faces:
        raise DecompositionError("Empty strip")
    for cycle in faces:
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            raise DecompositionError(f"Strip face {cycle!r} is not a simple cycle")
    if source_faces is None:
        source_faces = list(range(len(faces)))

    if links is None:
        links = []
        for a, b in zip(faces, faces[1:]):
            common = {frozenset(d) for d in _face_darts(a)} & {frozenset(d) for d in _face_darts(b)}
            if len(common) != 1:
                raise DecompositionError(f"Consecutive faces share {len(common)} edges instead of one")
            links.append(edge_key(*tuple(common.pop())))
    elif len(links) != len(faces) - 1:
        raise DecompositionError("Need one link edge per consecutive face pair")

    original_edges = {frozenset(d) for cycle in faces for d in _face_darts(cycle)}
    triangles: List[Triangle] = []
    sources: List[int] = []
    previous_diagonal: Optional[Edge] = None

    for i, cycle in enumerate(faces):
        length = len(cycle)
        entry = _locate(cycle, links[i - 1]) if i > 0 else None
        exit_ = _locate(cycle, links[i]) if i < len(faces) - 1 else None

        if entry is not None and previous_diagonal is not None:
            # the entry end shared with the previous diagonal stays fixed
            pivot_left = cycle[entry] in previous_diagonal
        else:
            pivot_left = True

        if entry is None and exit_ is None:
            entry, exit_ = 0, length - 1
        elif entry is None:
            entry = (exit_ + 1) % length
        elif exit_ is None:
            exit_ = (entry - 1) % length if pivot_left else (entry + 1) % length

        if entry == exit_:
            raise DecompositionError(f"Face {cycle!r} enters and leaves through the same edge")

        face_triangles = _ladder(cycle, entry, exit_, pivot_left)
        triangles.extend(face_triangles)
        sources.extend([source_faces[i]] * len(face_triangles))
        if len(triangles) >= 2:
            previous_diagonal = shared_edge(triangles[-2], triangles[-1])

    diagonals = tuple(shared_edge(a, b) for a, b in zip(triangles, triangles[1:]))
    if any(d is None for d in diagonals):
        raise DecompositionError("Consecutive triangles do not share an edge")
    added = frozenset(edge_key(u, v) for u, v in diagonals if frozenset((u, v)) not in original_edges)

    outerpath = Outerpath(
        boundary=_boundary_cycle(triangles),
        triangles=tuple(triangles),
        diagonals=diagonals,
        ears=(triangles[0], triangles[-1]),
        added_edges=added,
        source_faces=tuple(sources),
    )
    outerpath.check()
    logger.debug(f"Triangulated strip of {len(faces)} faces into {len(triangles)} triangles "
                 f"({len(added)} added diagonals)")
    return outerpath
