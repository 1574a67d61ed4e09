"""
Path-copath decompositions: a Hamiltonian path of the graph together with a Hamiltonian
path of the dual that never crosses an edge of the primal path
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from decompositions.outerpath import Outerpath, triangulate_outerpath
from graph_core.dual import DualGraph, dual
from graph_core.embedding import EmbeddedGraph
from graph_core.graph import Edge, Vertex, edge_key, sorted_vertices, vertex_key
from utils.exceptions import BudgetExhausted, DecompositionError
from utils.search import SearchBudget, SearchResult, SearchStatus

logger = logging.getLogger(__name__)

AppearanceNode = Tuple[Vertex, int]


@dataclass(frozen=True)
class PathCopathDecomposition:
    """
    Attributes:
        primal_path: Vertices of the Hamiltonian path in order
        dual_path: Face indices of the dual Hamiltonian path in order
        dual_edges: Primal edge crossed by each step of the dual path
    """
    primal_path: Tuple[Vertex, ...]
    dual_path: Tuple[int, ...]
    dual_edges: Tuple[Edge, ...]

    @property
    def primal_edges(self) -> Tuple[Edge, ...]:
        return tuple(edge_key(u, v) for u, v in zip(self.primal_path, self.primal_path[1:]))


def check_path_copath(E: EmbeddedGraph, decomposition: PathCopathDecomposition,
                      D: Optional[DualGraph] = None) -> None:
    """
    Check a path-copath certificate literally

    Raises:
        DecompositionError: describing the first violated condition
    """
    D = D or dual(E)
    path = decomposition.primal_path
    if sorted_vertices(path) != sorted_vertices(E.vertices) or len(set(path)) != len(path):
        raise DecompositionError("Primal path does not visit every vertex exactly once")
    for u, v in zip(path, path[1:]):
        if not E.has_edge(u, v):
            raise DecompositionError(f"Primal path uses missing edge ({u!r}, {v!r})")

    faces = decomposition.dual_path
    if sorted(faces) != list(range(len(D.faces))):
        raise DecompositionError("Dual path does not visit every face exactly once")
    if len(decomposition.dual_edges) != len(faces) - 1:
        raise DecompositionError("Need one crossed edge per dual path step")
    primal = set(decomposition.primal_edges)
    for (f, g), e in zip(zip(faces, faces[1:]), decomposition.dual_edges):
        e = edge_key(*e)
        if e in primal:
            raise DecompositionError(f"Edge {e!r} lies on both paths")
        if set(D.edge_faces.get(e, ())) != {f, g}:
            raise DecompositionError(f"Edge {e!r} does not separate faces {f} and {g}")


def _hamiltonian_paths(start, moves: Mapping, total: int,
                       budget: SearchBudget) -> Iterator[Tuple[Tuple, Tuple]]:
    """
    Hamiltonian paths beginning at `start`, depth-first on an explicit stack

    `moves` maps a node to its (next node, label) steps in search order. Yields the node
    sequence and the labels of the steps taken.
    """
    budget.tick()
    if total == 1:
        yield (start,), ()
        return
    nodes, labels, visited = [start], [], {start}
    stack = [iter(moves[start])]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            if stack:
                visited.discard(nodes.pop())
                labels.pop()
            continue
        node, label = step
        if node in visited:
            continue
        budget.tick()
        if len(nodes) + 1 == total:
            yield tuple(nodes) + (node,), tuple(labels) + (label,)
            continue
        visited.add(node)
        nodes.append(node)
        labels.append(label)
        stack.append(iter(moves[node]))


def find_path_copath(E: EmbeddedGraph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Exact joint backtracking for a path-copath decomposition

    Hamiltonian paths of the graph are enumerated in canonical order (each undirected
    path once); for each, a dual Hamiltonian path is searched using only dual edges of
    non-path edges.

    Returns:
        SearchResult: FOUND with a PathCopathDecomposition, NONE, or UNKNOWN
    """
    budget = budget or SearchBudget()
    if E.num_edges == 0:
        raise DecompositionError("Path-copath decompositions need at least one edge")
    D = dual(E)
    vertices = list(E.vertices)
    primal_moves = {v: [(w, None) for w in sorted(E.neighbors(v), key=vertex_key)] for v in vertices}
    n = len(vertices)
    logger.info(f"Searching path-copath decomposition: {n} vertices, {len(D.faces)} faces")

    def dual_search(primal_edges: frozenset) -> Optional[Tuple[Tuple[int, ...], Tuple[Edge, ...]]]:
        moves: Dict[int, List[Tuple[int, Edge]]] = {f: [] for f in range(len(D.faces))}
        for e, (f, g) in D.edge_faces.items():
            if e not in primal_edges:
                moves[f].append((g, e))
                moves[g].append((f, e))
        for f in moves:
            moves[f].sort(key=lambda step: (step[0], vertex_key(step[1][0]), vertex_key(step[1][1])))
        for start in range(len(D.faces)):
            for found in _hamiltonian_paths(start, moves, len(D.faces), budget):
                return found
        return None

    try:
        for start in vertices:
            for path, _ in _hamiltonian_paths(start, primal_moves, n, budget):
                if n > 1 and vertex_key(path[0]) > vertex_key(path[-1]):
                    continue
                found = dual_search(frozenset(edge_key(a, b) for a, b in zip(path, path[1:])))
                if found is not None:
                    return budget.result(SearchStatus.FOUND, PathCopathDecomposition(path, found[0], found[1]))
    except BudgetExhausted as e:
        return budget.result(SearchStatus.UNKNOWN, reason=str(e))
    return budget.result(SearchStatus.NONE, reason="no compatible Hamiltonian path pair")


# ============================================================================
# Cutting the plane along the primal path
# ============================================================================

class _CornerUnion:
    """Union-find over face corners (face index, position)"""

    def __init__(self):
        self.parent: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class CutOpenStrip:
    """
    The disk obtained by cutting the sphere along the primal path.

    Attributes:
        outerpath: Triangulated strip over appearance nodes (vertex, k)
        appearances: For each vertex, its appearance nodes in order
    """
    outerpath: Outerpath
    appearances: Dict[Vertex, Tuple[AppearanceNode, ...]]


def cut_open(E: EmbeddedGraph, decomposition: PathCopathDecomposition) -> CutOpenStrip:
    """
    Glue the faces along the dual path and triangulate the resulting strip

    Face corners are merged across every crossed edge; each vertex then has one
    appearance per incident path edge, and every path edge appears twice on the
    boundary of the strip.
    """
    D = dual(E)
    check_path_copath(E, decomposition, D)
    faces = [D.faces[f].vertices for f in decomposition.dual_path]
    position = {f: i for i, f in enumerate(decomposition.dual_path)}

    corners = _CornerUnion()
    for i, cycle in enumerate(faces):
        for j in range(len(cycle)):
            corners.find((i, j))

    def dart_index(cycle: Sequence[Vertex], u, w) -> int:
        for j in range(len(cycle)):
            if cycle[j] == u and cycle[(j + 1) % len(cycle)] == w:
                return j
        raise DecompositionError(f"Dart ({u!r}, {w!r}) not on face {cycle!r}")

    for (u, w) in decomposition.dual_edges:
        f_index = position[E.face_of_dart[(u, w)]]
        g_index = position[E.face_of_dart[(w, u)]]
        f_cycle, g_cycle = faces[f_index], faces[g_index]
        i = dart_index(f_cycle, u, w)
        j = dart_index(g_cycle, w, u)
        corners.union((f_index, i), (g_index, (j + 1) % len(g_cycle)))
        corners.union((f_index, (i + 1) % len(f_cycle)), (g_index, j))

    classes: Dict[Vertex, List[Tuple[int, int]]] = {}
    for i, cycle in enumerate(faces):
        for j, v in enumerate(cycle):
            root = corners.find((i, j))
            if root not in classes.setdefault(v, []):
                classes[v].append(root)
    node_of: Dict[Tuple[int, int], AppearanceNode] = {}
    appearances: Dict[Vertex, Tuple[AppearanceNode, ...]] = {}
    for v in sorted_vertices(classes):
        roots = sorted(classes[v])
        appearances[v] = tuple((v, k) for k in range(len(roots)))
        for k, root in enumerate(roots):
            node_of[root] = (v, k)

    node_faces = [tuple(node_of[corners.find((i, j))] for j in range(len(cycle)))
                  for i, cycle in enumerate(faces)]
    outerpath = triangulate_outerpath(node_faces, source_faces=decomposition.dual_path)
    logger.debug(f"Cut-open strip has {len(outerpath.boundary)} boundary appearances")
    return CutOpenStrip(outerpath=outerpath, appearances=appearances)
