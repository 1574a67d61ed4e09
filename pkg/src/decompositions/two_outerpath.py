"""
Two-outerpath decompositions: the faces split into two induced dual paths whose cut
edges form a Hamiltonian cycle of the graph
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from decompositions.outerpath import Outerpath, triangulate_outerpath
from graph_core.dual import DualGraph, dual
from graph_core.embedding import EmbeddedGraph
from graph_core.graph import Edge, Vertex, edge_key, vertex_key
from utils.exceptions import BudgetExhausted, DecompositionError
from utils.search import SearchBudget, SearchResult, SearchStatus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoOuterpathDecomposition:
    """
    Attributes:
        hamiltonian_cycle: Vertex order of the cut cycle
        side_assignment: Face index -> side 0 or 1
        face_paths: The faces of each side in dual-path order
        outerpaths: Triangulated strip of each side
    """
    hamiltonian_cycle: Tuple[Vertex, ...]
    side_assignment: Mapping[int, int]
    face_paths: Tuple[Tuple[int, ...], Tuple[int, ...]]
    outerpaths: Tuple[Outerpath, Outerpath]

    @property
    def cycle_edges(self) -> frozenset:
        n = len(self.hamiltonian_cycle)
        return frozenset(edge_key(self.hamiltonian_cycle[i], self.hamiltonian_cycle[(i + 1) % n])
                         for i in range(n))


# ============================================================================
# Validation
# ============================================================================

def _induced_path_order(D: DualGraph, faces: Sequence[int]) -> Optional[List[int]]:
    """Order of `faces` along the path they induce in the dual, or None"""
    if not faces:
        return None
    H = D.graph.subgraph(faces)
    if H.number_of_edges() != len(faces) - 1 or not nx.is_connected(H):
        return None
    if any(d > 2 for _, d in H.degree):
        return None
    ends = sorted((f for f, d in H.degree if d <= 1))
    order = [ends[0]]
    while len(order) < len(faces):
        order.append(next(g for g in sorted(H.neighbors(order[-1])) if g not in order[-2:-1]))
    return order


def _cut_cycle(E: EmbeddedGraph, D: DualGraph, side: Mapping[int, int]) -> Optional[Tuple[Vertex, ...]]:
    cut = nx.Graph()
    for (f, g), edges in D.primal_edges.items():
        if side[f] != side[g]:
            cut.add_edges_from(edges)
    if cut.number_of_nodes() != E.num_vertices or cut.number_of_edges() != E.num_vertices:
        return None
    if any(d != 2 for _, d in cut.degree) or not nx.is_connected(cut):
        return None
    start = min(cut.nodes, key=vertex_key)
    order = [start]
    previous, current = start, min(cut.neighbors(start), key=vertex_key)
    while current != start:
        order.append(current)
        previous, current = current, next(w for w in cut.neighbors(current) if w != previous)
    return tuple(order)


def _links(D: DualGraph, path: Sequence[int]) -> List[Edge]:
    links = []
    for f, g in zip(path, path[1:]):
        edges = D.primal_edges[(min(f, g), max(f, g))]
        if len(edges) != 1:
            raise DecompositionError(f"Faces {f} and {g} share {len(edges)} edges")
        links.append(edges[0])
    return links


def check_two_outerpath(E: EmbeddedGraph, decomposition: TwoOuterpathDecomposition) -> None:
    """
    Independent validity check of a two-outerpath decomposition

    Raises:
        DecompositionError: describing the first violated condition
    """
    D = dual(E)
    side = dict(decomposition.side_assignment)
    if set(side) != set(range(len(D.faces))) or set(side.values()) - {0, 1}:
        raise DecompositionError("Side assignment must map every face to 0 or 1")
    for s in (0, 1):
        members = [f for f, x in side.items() if x == s]
        order = _induced_path_order(D, members)
        if order is None:
            raise DecompositionError(f"Side {s} does not induce a path in the dual")
        path = list(decomposition.face_paths[s])
        if path not in (order, order[::-1]):
            raise DecompositionError(f"Face path of side {s} does not follow its induced path")
        for f, g in zip(path, path[1:]):
            if D.multiplicity(f, g) != 1:
                raise DecompositionError(f"Consecutive faces {f} and {g} share more than one edge")
    cycle = _cut_cycle(E, D, side)
    if cycle is None:
        raise DecompositionError("Cut edges between the sides are not a Hamiltonian cycle")
    if decomposition.cycle_edges != frozenset(edge_key(cycle[i], cycle[(i + 1) % len(cycle)])
                                              for i in range(len(cycle))):
        raise DecompositionError("Recorded Hamiltonian cycle differs from the cut edges")
    graph_edges = {frozenset(e) for e in E.edges}
    for s, outerpath in enumerate(decomposition.outerpaths):
        outerpath.check()
        if outerpath.boundary_edges != decomposition.cycle_edges:
            raise DecompositionError(f"Outerpath {s} is not bounded by the Hamiltonian cycle")
        for e in outerpath.edges - outerpath.added_edges:
            if frozenset(e) not in graph_edges:
                raise DecompositionError(f"Outerpath {s} uses edge {e!r} missing from the graph")


# ============================================================================
# Search
# ============================================================================

def _induced_paths_through(D: DualGraph, root: int, budget: SearchBudget) -> Iterator[List[int]]:
    """
    Induced paths of the dual containing `root`, each produced once

    A path is grown as head (reversed) + root + tail; the tail is grown first. The
    first head face must exceed the first tail face so a path and its reverse are not
    both produced. Both ends are grown depth-first on explicit stacks holding one
    neighbor iterator per face of that end.
    """
    adjacency = {f: sorted(D.graph.neighbors(f)) for f in D.graph.nodes}
    path_set = {root}

    def can_extend(end, g) -> bool:
        if g in path_set or D.multiplicity(end, g) != 1:
            return False
        return all(h == end or h not in path_set for h in adjacency[g])

    def grow(end_faces: List[int], allowed) -> Iterator[None]:
        """Yield after every extension of `end_faces` beyond its current length, restoring it at the end"""
        stack: List[Iterator[int]] = [iter(adjacency[end_faces[-1] if end_faces else root])]
        base = len(end_faces)
        while stack:
            g = next(stack[-1], None)
            if g is None:
                stack.pop()
                if stack:
                    path_set.discard(end_faces.pop())
                continue
            end = end_faces[-1] if end_faces else root
            if not allowed(len(end_faces) - base, g) or not can_extend(end, g):
                continue
            budget.tick()
            path_set.add(g)
            end_faces.append(g)
            yield
            stack.append(iter(adjacency[g]))

    def heads(tail: List[int]) -> Iterator[List[int]]:
        head: List[int] = []

        def first_head_face(depth: int, g: int) -> bool:
            return depth > 0 or (bool(tail) and g > tail[0])

        yield [root] + tail
        for _ in grow(head, first_head_face):
            yield list(reversed(head)) + [root] + tail

    tail: List[int] = []
    yield from heads(tail)
    for _ in grow(tail, lambda depth, g: True):
        yield from heads(tail)


def find_two_outerpath(E: EmbeddedGraph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Exact search for a two-outerpath decomposition

    Enumerates the induced dual paths through face 0; each is accepted when its
    complement is a nonempty induced path, both paths change faces across single edges,
    and the cut edges form a Hamiltonian cycle. Both sides are then triangulated.

    Args:
        E: Connected sphere embedding with simple faces
        budget: Node/time budget (unlimited when None)

    Returns:
        SearchResult: FOUND with a TwoOuterpathDecomposition, NONE, or UNKNOWN
    """
    budget = budget or SearchBudget()
    D = dual(E)
    if any(not face.is_simple for face in D.faces):
        raise DecompositionError("Every face must be a simple cycle")
    all_faces = set(range(len(D.faces)))
    logger.info(f"Searching two-outerpath decomposition over {len(all_faces)} faces")

    try:
        for side_a in _induced_paths_through(D, 0, budget):
            rest = sorted(all_faces - set(side_a))
            if not rest:
                continue
            side_b = _induced_path_order(D, rest)
            if side_b is None or any(D.multiplicity(f, g) != 1 for f, g in zip(side_b, side_b[1:])):
                continue
            side = {f: 0 for f in side_a}
            side.update({f: 1 for f in side_b})
            cycle = _cut_cycle(E, D, side)
            if cycle is None:
                continue

            outerpaths = tuple(
                triangulate_outerpath([D.faces[f].vertices for f in path], _links(D, path), source_faces=path)
                for path in (side_a, side_b)
            )
            decomposition = TwoOuterpathDecomposition(
                hamiltonian_cycle=cycle,
                side_assignment=dict(sorted(side.items())),
                face_paths=(tuple(side_a), tuple(side_b)),
                outerpaths=outerpaths,
            )
            return budget.result(SearchStatus.FOUND, decomposition)
    except BudgetExhausted as e:
        return budget.result(SearchStatus.UNKNOWN, reason=str(e))

    return budget.result(SearchStatus.NONE, reason="no induced path partition of the dual")
