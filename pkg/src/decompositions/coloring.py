"""
Exact proper colorings by backtracking
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from graph_core.graph import Vertex, sorted_vertices, vertex_key
from utils.exceptions import BudgetExhausted, DecompositionError
from utils.search import SearchBudget, SearchResult, SearchStatus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProperColoring:
    """A coloring `colors` of the vertices with values in range(c)"""
    colors: Mapping[Vertex, int]
    c: int

    def classes(self) -> List[List[Vertex]]:
        return [sorted_vertices(v for v, x in self.colors.items() if x == color) for color in range(self.c)]


def check_coloring(G: nx.Graph, coloring: ProperColoring) -> None:
    """
    Raises:
        DecompositionError: if a vertex is uncolored, a color is out of range, or an
            edge is monochromatic
    """
    for v in G.nodes:
        if v not in coloring.colors:
            raise DecompositionError(f"Vertex {v!r} has no color")
        if not 0 <= coloring.colors[v] < coloring.c:
            raise DecompositionError(f"Vertex {v!r} has color {coloring.colors[v]} outside range({coloring.c})")
    for u, v in G.edges:
        if coloring.colors[u] == coloring.colors[v]:
            raise DecompositionError(f"Edge ({u!r}, {v!r}) is monochromatic")


def _search_order(G: nx.Graph) -> List[Vertex]:
    """Breadth-first order from the least vertex of each component"""
    order: List[Vertex] = []
    seen = set()
    for root in sorted_vertices(G.nodes):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(G.neighbors(v), key=vertex_key):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def proper_coloring(G: nx.Graph, c: int, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Exact search for a proper c-coloring

    Vertices are colored in breadth-first order; a vertex may only open the next unused
    color, which removes color-permutation symmetry. The search keeps one frame per
    colored vertex on an explicit stack.

    Returns:
        SearchResult: FOUND with a ProperColoring, NONE, or UNKNOWN
    """
    if c < 1:
        raise DecompositionError(f"Number of colors must be positive, got {c}")
    budget = budget or SearchBudget()
    order = _search_order(G)
    colors: Dict[Vertex, int] = {}

    def options(index: int, used: int) -> Iterator[int]:
        forbidden = {colors[w] for w in G.neighbors(order[index]) if w in colors}
        return iter([color for color in range(min(used + 1, c)) if color not in forbidden])

    def search() -> bool:
        budget.tick()
        if not order:
            return True
        # frame: (remaining colors, colors in use before this vertex)
        stack: List[Tuple[Iterator[int], int]] = [(options(0, 0), 0)]
        while stack:
            remaining, used = stack[-1]
            v = order[len(stack) - 1]
            colors.pop(v, None)
            color = next(remaining, None)
            if color is None:
                stack.pop()
                continue
            colors[v] = color
            budget.tick()
            if len(stack) == len(order):
                return True
            used = max(used, color + 1)
            stack.append((options(len(stack), used), used))
        return False

    try:
        if search():
            coloring = ProperColoring(dict(sorted(colors.items(), key=lambda item: vertex_key(item[0]))), c)
            check_coloring(G, coloring)
            return budget.result(SearchStatus.FOUND, coloring)
    except BudgetExhausted as e:
        return budget.result(SearchStatus.UNKNOWN, reason=str(e))
    return budget.result(SearchStatus.NONE, reason=f"graph is not {c}-colorable")


def three_color(G: nx.Graph, budget: Optional[SearchBudget] = None) -> SearchResult:
    return proper_coloring(G, 3, budget)


def two_color(G: nx.Graph, budget: Optional[SearchBudget] = None) -> SearchResult:
    return proper_coloring(G, 2, budget)
