"""
Named graphs used as fixtures, with canonical embeddings for the platonic solids
"""

import logging
from typing import Callable, Dict, NamedTuple, Union

import networkx as nx

from graph_core.embedding import EmbeddedGraph, rotation_from_faces
from graph_core.graph import canonical_copy
from graph_core.planarity import is_planar
from utils.exceptions import ConstructionError

logger = logging.getLogger(__name__)


def _require(n, minimum: int, name: str) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise ConstructionError(f"{name} needs an integer size >= {minimum}, got {n!r}")


def _embed(G: nx.Graph) -> EmbeddedGraph:
    result = is_planar(canonical_copy(G))
    if not result.planar:
        raise ConstructionError("Graph has no planar embedding")
    return result.embedding


# ============================================================================
# Abstract graphs
# ============================================================================

def complete(n: int) -> nx.Graph:
    _require(n, 1, "complete")
    return nx.complete_graph(n)


def complete_multipartite(*parts: int) -> nx.Graph:
    """Complete multipartite graph; part i holds consecutive integer ids"""
    if not parts:
        raise ConstructionError("complete_multipartite needs at least one part")
    for size in parts:
        _require(size, 1, "complete_multipartite")
    return canonical_copy(nx.complete_multipartite_graph(*parts))


def cycle(n: int) -> nx.Graph:
    _require(n, 3, "cycle")
    return nx.cycle_graph(n)


def wheel(n: int) -> nx.Graph:
    """Wheel on n vertices: hub 0 joined to the rim cycle 1..n-1"""
    _require(n, 4, "wheel")
    return nx.wheel_graph(n)


def path(n: int) -> nx.Graph:
    """Path on n vertices 0..n-1"""
    _require(n, 1, "path")
    return nx.path_graph(n)


def star(n: int) -> nx.Graph:
    """Star K_{1,n} with center 0"""
    _require(n, 1, "star")
    return nx.star_graph(n)


# ============================================================================
# Embedded graphs
# ============================================================================

def tetrahedron() -> EmbeddedGraph:
    return _embed(complete(4))


def octahedron() -> EmbeddedGraph:
    """K_{2,2,2} with parts {0, 1}, {2, 3}, {4, 5}"""
    return _embed(complete_multipartite(2, 2, 2))


def icosahedron() -> EmbeddedGraph:
    return _embed(nx.icosahedral_graph())


def cube() -> EmbeddedGraph:
    return _embed(nx.cubical_graph())


def dodecahedron() -> EmbeddedGraph:
    return _embed(nx.dodecahedral_graph())


def bipyramid(n: int) -> EmbeddedGraph:
    """
    Maximal planar graph on n vertices: rim cycle 0..n-3 and poles n-2, n-1
    """
    _require(n, 5, "bipyramid")
    rim = n - 2
    top, bottom = n - 2, n - 1
    faces = []
    for i in range(rim):
        j = (i + 1) % rim
        faces.append((i, j, top))
        faces.append((j, i, bottom))
    return rotation_from_faces(faces)


def embedded(G: nx.Graph) -> EmbeddedGraph:
    """Embedding of a planar graph as found by the planarity test"""
    return _embed(G)


# ============================================================================
# Registry
# ============================================================================

class GeneratorSpec(NamedTuple):
    factory: Callable[..., Union[nx.Graph, EmbeddedGraph]]
    arity: str
    help: str


GENERATORS: Dict[str, GeneratorSpec] = {
    "complete": GeneratorSpec(complete, "n", "complete graph K_n"),
    "complete-multipartite": GeneratorSpec(complete_multipartite, "parts...", "complete multipartite graph"),
    "cycle": GeneratorSpec(cycle, "n", "cycle C_n"),
    "wheel": GeneratorSpec(wheel, "n", "wheel on n vertices"),
    "path": GeneratorSpec(path, "n", "path on n vertices"),
    "star": GeneratorSpec(star, "n", "star K_{1,n}"),
    "tetrahedron": GeneratorSpec(tetrahedron, "", "embedded K4"),
    "octahedron": GeneratorSpec(octahedron, "", "embedded K_{2,2,2}"),
    "icosahedron": GeneratorSpec(icosahedron, "", "embedded icosahedron"),
    "cube": GeneratorSpec(cube, "", "embedded cube"),
    "dodecahedron": GeneratorSpec(dodecahedron, "", "embedded dodecahedron"),
    "bipyramid": GeneratorSpec(bipyramid, "n", "embedded maximal planar bipyramid on n vertices"),
}


def named_graph(name: str, *params: int) -> Union[nx.Graph, EmbeddedGraph]:
    """
    Build a registered graph by name

    Raises:
        ConstructionError: unknown name or bad parameters
    """
    spec = GENERATORS.get(name)
    if spec is None:
        raise ConstructionError(f"Unknown graph '{name}'; choose from {', '.join(GENERATORS)}")
    try:
        return spec.factory(*params)
    except TypeError as e:
        raise ConstructionError(f"Bad parameters for '{name}' ({spec.arity or 'none'}): {e}") from e
