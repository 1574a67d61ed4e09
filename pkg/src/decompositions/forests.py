"""
Partitions of the edge set into forests
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.coloring.greedy_coloring import strategy_smallest_last

from graph_core.graph import Edge, edge_key, sorted_edges
from utils.exceptions import BudgetExhausted, DecompositionError
from utils.search import SearchBudget, SearchResult, SearchStatus

logger = logging.getLogger(__name__)


class UnionFind:
    """
    Union-find over hashable elements with union by size and an undo log.

    Path compression is disabled so that `rollback` can restore earlier states
    during backtracking.
    """

    def __init__(self):
        self.parents: Dict[Hashable, Hashable] = {}
        self.sizes: Dict[Hashable, int] = {}
        self.history: List[Optional[Tuple[Hashable, Hashable]]] = []

    def find_parent(self, elem: Hashable) -> Hashable:
        if elem not in self.parents:
            self.parents[elem] = elem
            self.sizes[elem] = 1
        p = elem
        while p != self.parents[p]:
            p = self.parents[p]
        return p

    def union(self, a: Hashable, b: Hashable) -> bool:
        """Merge the sets of a and b; False (and nothing logged) if already joined"""
        p1, p2 = self.find_parent(a), self.find_parent(b)
        if p1 == p2:
            return False
        if self.sizes[p1] < self.sizes[p2]:
            p1, p2 = p2, p1
        self.parents[p2] = p1
        self.sizes[p1] += self.sizes[p2]
        self.history.append((p1, p2))
        return True

    def rollback(self) -> None:
        """Undo the most recent successful union"""
        p1, p2 = self.history.pop()
        self.parents[p2] = p2
        self.sizes[p1] -= self.sizes[p2]


@dataclass(frozen=True)
class ForestPartition:
    """Edge sets, each acyclic, partitioning the edges of a graph"""
    forests: Tuple[FrozenSet[Edge], ...]

    @property
    def size(self) -> int:
        return len(self.forests)

    def forest_of(self, u, v) -> int:
        e = edge_key(u, v)
        for index, forest in enumerate(self.forests):
            if e in forest:
                return index
        raise KeyError(e)


def is_forest(edges) -> bool:
    uf = UnionFind()
    return all(uf.union(u, v) for u, v in edges)


def check_forest_partition(G: nx.Graph, partition: ForestPartition) -> None:
    """
    Raises:
        DecompositionError: if a part has a cycle, parts overlap, or edges are missing
    """
    seen = set()
    for index, forest in enumerate(partition.forests):
        if not is_forest(forest):
            raise DecompositionError(f"Part {index} contains a cycle")
        for e in forest:
            e = edge_key(*e)
            if e in seen:
                raise DecompositionError(f"Edge {e!r} lies in two parts")
            if not G.has_edge(*e):
                raise DecompositionError(f"Edge {e!r} is not in the graph")
            seen.add(e)
    if len(seen) != G.number_of_edges():
        raise DecompositionError("Parts do not cover every edge")


def density_obstruction(G: nx.Graph, a: int) -> Optional[str]:
    """A connected component with more than a(n - 1) edges cannot split into a forests"""
    for component in nx.connected_components(G):
        n = len(component)
        m = G.subgraph(component).number_of_edges()
        if m > a * (n - 1):
            return f"component with {n} vertices has {m} > {a * (n - 1)} edges"
    return None


def _greedy(G: nx.Graph, a: int) -> Optional[List[List[Edge]]]:
    """First-fit over edges in smallest-last (degeneracy) vertex order"""
    order = list(strategy_smallest_last(G, {}))
    rank = {v: i for i, v in enumerate(order)}
    edges = sorted(sorted_edges(G.edges), key=lambda e: (max(rank[e[0]], rank[e[1]]), min(rank[e[0]], rank[e[1]])))
    forests = [UnionFind() for _ in range(a)]
    parts: List[List[Edge]] = [[] for _ in range(a)]
    for u, v in edges:
        for index in range(a):
            if forests[index].union(u, v):
                parts[index].append((u, v))
                break
        else:
            return None
    return parts


def forest_partition(G: nx.Graph, a: int, budget: Optional[SearchBudget] = None,
                     greedy_first: bool = True) -> SearchResult:
    """
    Partition the edges of G into at most `a` forests

    A density check proves NONE early; otherwise a degeneracy-ordered greedy pass is
    tried before exact backtracking with union-find cycle pruning.

    Returns:
        SearchResult: FOUND with a ForestPartition of exactly `a` parts (some possibly
            empty), NONE, or UNKNOWN
    """
    if isinstance(a, bool) or not isinstance(a, int) or a < 1:
        raise DecompositionError(f"Number of forests must be a positive integer, got {a!r}")
    budget = budget or SearchBudget()

    obstruction = density_obstruction(G, a)
    if obstruction is not None:
        return budget.result(SearchStatus.NONE, reason=obstruction)

    def found(parts) -> SearchResult:
        partition = ForestPartition(tuple(frozenset(p) for p in parts))
        check_forest_partition(G, partition)
        return budget.result(SearchStatus.FOUND, partition)

    if greedy_first:
        parts = _greedy(G, a)
        if parts is not None:
            logger.debug("Greedy forest partition succeeded")
            return found(parts)

    edges = sorted_edges(G.edges)
    forests = [UnionFind() for _ in range(a)]
    parts: List[List[Edge]] = [[] for _ in range(a)]

    def search() -> bool:
        budget.tick()
        if not edges:
            return True
        # one frame per placed edge: [next part to try, parts in use before it, part holding it]
        frames: List[List[int]] = [[0, 0, -1]]
        while frames:
            frame = frames[-1]
            u, v = edges[len(frames) - 1]
            if frame[2] >= 0:
                parts[frame[2]].pop()
                forests[frame[2]].rollback()
                frame[2] = -1
            limit = min(frame[1] + 1, a)
            while frame[0] < limit and not forests[frame[0]].union(u, v):
                frame[0] += 1
            if frame[0] >= limit:
                frames.pop()
                continue
            part = frame[0]
            frame[0] += 1
            frame[2] = part
            parts[part].append((u, v))
            budget.tick()
            if len(frames) == len(edges):
                return True
            frames.append([0, max(frame[1], part + 1), -1])
        return False

    try:
        if search():
            return found(parts)
    except BudgetExhausted as e:
        return budget.result(SearchStatus.UNKNOWN, reason=str(e))
    return budget.result(SearchStatus.NONE, reason=f"no partition into {a} forests")
