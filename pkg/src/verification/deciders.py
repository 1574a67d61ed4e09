"""
Exact deciders for planarity, biplanarity and split thickness two on small graphs.

"no" is only reported after a counting bound or an exhausted search; a spent budget
gives "unknown". Every "yes" carries a drawing that has passed validate_drawing.
"""

import enum
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from constructions.blowup import BlowupVertex, blowup
from drawings.model import DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, make_drawing
from graph_core.embedding import relabel
from graph_core.graph import Edge, Vertex, sorted_edges, sorted_vertices, validate_simple_graph, vertex_key
from graph_core.planarity import is_planar, is_planar_graph
from utils.config import get_decider_config, get_performance_config
from utils.exceptions import BudgetExhausted, InternalConsistencyError, VerificationError
from utils.search import SearchBudget
from verification.validate import validate_drawing

logger = logging.getLogger(__name__)

NAIVE_ORACLE_MAX_EDGES = 16


class Answer(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DecisionResult:
    """
    Attributes:
        answer: yes, no or unknown
        certificate: Validated drawing for yes answers
        nodes: Search nodes expanded
        reason: Why the answer was reached
        elapsed: Wall-clock seconds
    """
    answer: Answer
    certificate: Optional[LayeredDrawing] = None
    nodes: int = 0
    reason: str = ""
    elapsed: float = 0.0


class _Stopped(Exception):
    """Another worker already found a certificate"""


def _decision(answer: Answer, budget: SearchBudget, certificate: Optional[LayeredDrawing] = None,
              reason: str = "") -> DecisionResult:
    logger.info(f"Decision: {answer.value} after {budget.nodes} nodes ({reason})")
    return DecisionResult(answer, certificate, budget.nodes, reason, budget.elapsed)


def _embedded_plane(H: nx.Graph, image_of: Callable[[Vertex], ImageId]) -> PlaneDrawing:
    """Plane drawing of H whose vertices become images of the 1-blowup"""
    result = is_planar(H)
    if not result.planar:
        raise InternalConsistencyError("Certificate class is not planar")
    mapping = {v: image_of(v) for v in result.embedding.vertices}
    return PlaneDrawing(relabel(result.embedding, mapping))


def _certified(drawing: LayeredDrawing) -> LayeredDrawing:
    report = validate_drawing(drawing)
    if not report.valid:
        raise InternalConsistencyError(f"Decider certificate failed validation: {report.first_violation}")
    return drawing


def _thickness_certificate(G: nx.Graph, classes: Sequence[nx.Graph]) -> LayeredDrawing:
    planes = []
    for p, H in enumerate(classes):
        H = H.copy()
        if p == 0:
            H.add_nodes_from(v for v in G.nodes if not any(v in C for C in classes))
        planes.append(_embedded_plane(H, lambda v, p=p: ImageId(BlowupVertex(v, 0), p)))
    return _certified(make_drawing(DrawingKind.thickness(len(classes)), planes, blowup(G, 1),
                                   construction="decider"))


def decide_planar(G: nx.Graph) -> DecisionResult:
    """Planarity as a decision with a one-plane certificate"""
    validate_simple_graph(G)
    budget = SearchBudget()
    if not is_planar_graph(G):
        return _decision(Answer.NO, budget, reason="Kuratowski subgraph found")
    return _decision(Answer.YES, budget, _thickness_certificate(G, [G]), reason="planar")


# ============================================================================
# Biplanarity
# ============================================================================

def _edge_order(G: nx.Graph) -> List[Edge]:
    """Edges grouped by their later endpoint, vertices by decreasing degree"""
    order = sorted(G.nodes, key=lambda v: (-G.degree(v), vertex_key(v)))
    rank = {v: i for i, v in enumerate(order)}
    return sorted(sorted_edges(G.edges), key=lambda e: (max(rank[e[0]], rank[e[1]]), min(rank[e[0]], rank[e[1]])))


def _search_subtree(edges: Sequence[Edge], prefix: Sequence[int], budget: SearchBudget,
                    stop: threading.Event) -> Optional[List[nx.Graph]]:
    """
    Depth-first search over 2-colorings extending `prefix`

    The class that receives an edge is the only one re-tested for planarity. The
    smaller class is tried first.
    """
    classes = [nx.Graph(), nx.Graph()]
    for (u, v), c in zip(edges, prefix):
        classes[c].add_edge(u, v)
    if not all(is_planar_graph(H) for H in classes):
        return None

    def extend(i: int) -> bool:
        if stop.is_set():
            raise _Stopped()
        budget.tick()
        if i == len(edges):
            return True
        u, v = edges[i]
        order = (0, 1) if classes[0].number_of_edges() <= classes[1].number_of_edges() else (1, 0)
        for c in order:
            H = classes[c]
            H.add_edge(u, v)
            if is_planar_graph(H) and extend(i + 1):
                return True
            H.remove_edge(u, v)
        return False

    return classes if extend(len(prefix)) else None


def decide_biplanar(G: nx.Graph, budget: Optional[SearchBudget] = None,
                    max_workers: Optional[int] = None, split_depth: Optional[int] = None) -> DecisionResult:
    """
    Decide whether G has thickness at most two

    Planar graphs and graphs with more than 6n - 12 edges are settled at once.
    Otherwise edges are 2-colored depth-first with incremental planarity pruning; the
    first edge always gets color 0, which removes the color-swap symmetry. With several
    workers the subtrees below the first `split_depth` edges run on a thread pool
    sharing one budget; a found certificate stops the others.

    Returns:
        DecisionResult: yes with a validated thickness-2 drawing of G (as its
            1-blowup), no, or unknown
    """
    validate_simple_graph(G)
    decider = get_decider_config()
    performance = get_performance_config()
    budget = budget or SearchBudget(decider.biplanar_node_budget, decider.time_limit_seconds)
    max_workers = max_workers or performance.max_workers
    split_depth = performance.split_depth if split_depth is None else split_depth

    n, m = G.number_of_nodes(), G.number_of_edges()
    if is_planar_graph(G):
        return _decision(Answer.YES, budget, _thickness_certificate(G, [G, nx.Graph()]), reason="planar")
    if m > 6 * n - 12:
        return _decision(Answer.NO, budget, reason=f"{m} edges exceed 6n - 12 = {6 * n - 12}")

    edges = _edge_order(G)
    logger.info(f"Deciding biplanarity: {n} vertices, {m} edges, {max_workers} worker(s)")
    stop = threading.Event()

    if max_workers <= 1:
        prefixes = [(0,)]
    else:
        depth = max(1, min(split_depth, len(edges)))
        prefixes = [(0,) + rest for rest in product((0, 1), repeat=depth - 1)]

    found: Dict[int, List[nx.Graph]] = {}
    exhausted: List[str] = []
    lock = threading.Lock()

    def run(index: int, prefix: Tuple[int, ...]) -> None:
        try:
            classes = _search_subtree(edges, prefix, budget, stop)
        except _Stopped:
            return
        except BudgetExhausted as e:
            with lock:
                exhausted.append(str(e))
            stop.set()
            return
        except Exception:
            stop.set()
            raise
        if classes is not None:
            with lock:
                found[index] = classes
            stop.set()

    if max_workers <= 1:
        run(0, prefixes[0])
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            futures = [pool.submit(run, index, prefix) for index, prefix in enumerate(prefixes)]
        # a failed subtree must not read as an exhausted one
        for future in futures:
            future.result()

    if found:
        classes = found[min(found)]
        return _decision(Answer.YES, budget, _thickness_certificate(G, classes), reason="partition found")
    if exhausted:
        return _decision(Answer.UNKNOWN, budget, reason=exhausted[0])
    return _decision(Answer.NO, budget, reason="search space exhausted")


def naive_biplanar_oracle(G: nx.Graph) -> bool:
    """
    Plain enumeration of all edge 2-colorings, for cross-checking on small graphs

    Raises:
        VerificationError: if G has more than NAIVE_ORACLE_MAX_EDGES edges
    """
    edges = sorted_edges(G.edges)
    if len(edges) > NAIVE_ORACLE_MAX_EDGES:
        raise VerificationError(f"Naive oracle is limited to {NAIVE_ORACLE_MAX_EDGES} edges")
    for colors in product((0, 1), repeat=len(edges)):
        classes = [nx.Graph(), nx.Graph()]
        for e, c in zip(edges, colors):
            classes[c].add_edge(*e)
        if all(is_planar_graph(H) for H in classes):
            return True
    return False


# ============================================================================
# Split thickness two
# ============================================================================

def split_enumeration_size(G: nx.Graph) -> int:
    """Number of per-vertex splits: sum of 2^(deg - 1) over non-isolated vertices"""
    return sum(2 ** (d - 1) for _, d in G.degree if d > 0)


def decide_split2(G: nx.Graph, budget: Optional[SearchBudget] = None) -> DecisionResult:
    """
    Decide whether G has a split-2 drawing

    Each vertex sends every incident edge to one of two images (its first edge always
    to image 0, so an empty second image means no split). Vertices are decided one at
    a time in decreasing degree order; the graph of edges whose endpoints are both
    decided must stay planar.

    Returns:
        DecisionResult: yes with a validated split(2) drawing of G (as its 1-blowup), no
            when G has more than 6n - 6 edges or the search is exhausted, unknown when
            the split enumeration exceeds the budget
    """
    validate_simple_graph(G)
    decider = get_decider_config()
    budget = budget or SearchBudget(decider.split2_node_budget, decider.time_limit_seconds)
    n, m = G.number_of_nodes(), G.number_of_edges()

    def certificate(side: Dict[Tuple[Vertex, Vertex], int]) -> LayeredDrawing:
        H = nx.Graph()
        H.add_nodes_from((v, 0) for v in G.nodes)
        for u, v in G.edges:
            H.add_edge((u, side[(u, v)]), (v, side[(v, u)]))
        plane = _embedded_plane(H, lambda node: ImageId(BlowupVertex(node[0], 0), node[1]))
        return _certified(make_drawing(DrawingKind.split(2), [plane], blowup(G, 1), construction="decider"))

    if is_planar_graph(G):
        side = {(u, v): 0 for a, b in G.edges for u, v in ((a, b), (b, a))}
        return _decision(Answer.YES, budget, certificate(side), reason="planar, no splits")
    if m > 6 * n - 6:
        return _decision(Answer.NO, budget, reason=f"{m} edges exceed 6n - 6 = {6 * n - 6}")
    size = split_enumeration_size(G)
    if budget.max_nodes is not None and size > budget.max_nodes:
        return _decision(Answer.UNKNOWN, budget, reason=f"split enumeration of {size} exceeds the budget")

    order = sorted(G.nodes, key=lambda v: (-G.degree(v), vertex_key(v)))
    incident = {v: sorted_vertices(G.neighbors(v)) for v in order}
    side: Dict[Tuple[Vertex, Vertex], int] = {}
    decided = set()
    H = nx.Graph()

    def extend(index: int) -> bool:
        budget.tick()
        if index == len(order):
            return True
        v = order[index]
        neighbors = incident[v]
        for choice in product((0, 1), repeat=max(len(neighbors) - 1, 0)):
            for w, s in zip(neighbors, (0,) + choice):
                side[(v, w)] = s
            added = [((v, side[(v, w)]), (w, side[(w, v)])) for w in neighbors if w in decided]
            H.add_edges_from(added)
            if is_planar_graph(H):
                decided.add(v)
                if extend(index + 1):
                    return True
                decided.discard(v)
            H.remove_edges_from(added)
        for w in neighbors:
            side.pop((v, w), None)
        return False

    logger.info(f"Deciding split thickness two: {n} vertices, {m} edges, {size} splits")
    try:
        if extend(0):
            return _decision(Answer.YES, budget, certificate(side), reason="split found")
    except BudgetExhausted as e:
        return _decision(Answer.UNKNOWN, budget, reason=str(e))
    return _decision(Answer.NO, budget, reason="search space exhausted")
