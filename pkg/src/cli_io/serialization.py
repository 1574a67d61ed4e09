"""
JSON interchange format for graphs, embeddings, certificates, drawings and decisions.

Every document the lab writes carries "format_version" and "type". Vertex ids are
encoded recursively: integers and strings as themselves, tuples as lists. A graph is
{"vertices": [...], "edges": [[u, v], ...]}, and an embedded graph adds
"rotation": {v: [neighbors in cyclic order]}. JSON object keys are strings, so a
rotation key is the vertex's text: strings as themselves, integers in decimal,
structured ids as compact JSON. Plain graph files without "format_version" and "type"
are accepted as graph documents (embedded when they carry a rotation).
"""

import json
import logging
import os
from typing import Any, Dict, List, Optional

import networkx as nx

from constructions.blowup import BlowupVertex
from decompositions.coloring import ProperColoring
from decompositions.forests import ForestPartition
from decompositions.outerpath import Outerpath
from decompositions.path_copath import PathCopathDecomposition
from decompositions.two_outerpath import TwoOuterpathDecomposition
from drawings.model import DrawingKind, ImageId, LayeredDrawing, PlaneDrawing
from graph_core.embedding import EmbeddedGraph
from graph_core.graph import edge_key, graph_from_edges, sorted_edges, sorted_vertices
from utils.config import get_config
from utils.exceptions import FormatError, GraphStructureError
from utils.helpers import dumps_json, ensure_directory

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

GRAPH = "graph"
EMBEDDED_GRAPH = "embedded_graph"
CERTIFICATE = "certificate"
DRAWING = "drawing"
DECISION = "decision"
REPORT = "report"

CERTIFICATE_TYPES = {
    "two-outerpath": TwoOuterpathDecomposition,
    "path-copath": PathCopathDecomposition,
    "3color": ProperColoring,
    "forests": ForestPartition,
}


# ============================================================================
# Vertex ids and envelopes
# ============================================================================

def encode_vertex(v: Any) -> Any:
    if isinstance(v, (int, str)):
        return v
    if isinstance(v, tuple):
        return [encode_vertex(x) for x in v]
    raise FormatError(f"Cannot encode vertex id of type {type(v).__name__}: {v!r}")


def decode_vertex(x: Any) -> Any:
    if isinstance(x, bool):
        raise FormatError(f"Boolean is not a vertex id: {x!r}")
    if isinstance(x, (int, str)):
        return x
    if isinstance(x, list):
        return tuple(decode_vertex(y) for y in x)
    raise FormatError(f"Cannot decode vertex id: {x!r}")


def _blowup_vertex(x: Any) -> BlowupVertex:
    if not isinstance(x, list) or len(x) != 2 or not isinstance(x[1], int):
        raise FormatError(f"Malformed blowup vertex: {x!r}")
    return BlowupVertex(decode_vertex(x[0]), x[1])


def envelope(doc_type: str, **fields) -> Dict[str, Any]:
    return {"format_version": FORMAT_VERSION, "type": doc_type, **fields}


def vertex_text(x: Any) -> str:
    """Object key for an encoded vertex id"""
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return json.dumps(x, separators=(",", ":"), ensure_ascii=False)


def _key_lookup(vertices: List[Any], encode) -> Dict[str, Any]:
    lookup: Dict[str, Any] = {}
    for v in vertices:
        key = vertex_text(encode(v))
        if key in lookup:
            raise FormatError(f"Vertices {lookup[key]!r} and {v!r} share the rotation key {key!r}")
        lookup[key] = v
    return lookup


def document_type(doc: Any) -> str:
    """Type of a document; bare {"vertices", "edges"[, "rotation"]} objects count as graphs"""
    if not isinstance(doc, dict):
        raise FormatError("Document is not a JSON object")
    if "format_version" not in doc and "type" not in doc and "vertices" in doc:
        return EMBEDDED_GRAPH if doc.get("rotation") is not None else GRAPH
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise FormatError(f"Unsupported format_version {version!r} (expected {FORMAT_VERSION})")
    return doc.get("type")


def check_envelope(doc: Any, expected: Optional[str] = None) -> str:
    doc_type = document_type(doc)
    if expected is not None and doc_type != expected:
        raise FormatError(f"Expected a '{expected}' document, got '{doc_type}'")
    return doc_type


def _field(doc: Dict[str, Any], name: str) -> Any:
    try:
        return doc[name]
    except KeyError:
        raise FormatError(f"Document is missing '{name}'") from None


def _list_field(doc: Dict[str, Any], name: str) -> List[Any]:
    value = _field(doc, name)
    if not isinstance(value, list):
        raise FormatError(f"'{name}' must be a list")
    return value


# ============================================================================
# Graphs and embeddings
# ============================================================================

def _decode_pairs(items: List[Any], decode) -> List[tuple]:
    pairs = []
    for pair in items:
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"Malformed edge: {pair!r}")
        pairs.append((decode(pair[0]), decode(pair[1])))
    return pairs


def _simple_graph(vertices: List[Any], edges: List[tuple]) -> nx.Graph:
    if len(set(vertices)) != len(vertices):
        raise FormatError("Vertex list repeats a vertex")
    try:
        return graph_from_edges(vertices, edges)
    except GraphStructureError as e:
        raise FormatError(f"Not a simple graph: {e}") from e


def _graph_fields(G: nx.Graph, encode) -> Dict[str, Any]:
    return {
        "vertices": [encode(v) for v in sorted_vertices(G.nodes)],
        "edges": [[encode(u), encode(v)] for u, v in sorted_edges(G.edges)],
    }


def encode_graph(G: nx.Graph) -> Dict[str, Any]:
    fields = _graph_fields(G, encode_vertex)
    if "k" in G.graph:
        fields["blowup"] = {"k": G.graph["k"], "closed": bool(G.graph.get("closed", False))}
    return envelope(GRAPH, **fields)


def decode_graph(doc: Dict[str, Any]) -> nx.Graph:
    check_envelope(doc, GRAPH)
    blowup = doc.get("blowup")
    decode = _blowup_vertex if blowup else decode_vertex
    vertices = [decode(x) for x in _list_field(doc, "vertices")]
    G = _simple_graph(vertices, _decode_pairs(_list_field(doc, "edges"), decode))
    G.graph.update(blowup or {})
    return G


def _rotation_fields(embedding: EmbeddedGraph, encode) -> Dict[str, Any]:
    fields = _graph_fields(embedding.graph, encode)
    _key_lookup(list(embedding.vertices), encode)
    fields["rotation"] = {
        vertex_text(encode(v)): [encode(u) for u in embedding.rotation[v]]
        for v in sorted_vertices(embedding.vertices)
    }
    return fields


def _decode_rotation(doc: Dict[str, Any], vertices: List[Any], decode, encode) -> EmbeddedGraph:
    """Embedding from a "rotation" map; vertices missing from the map are isolated"""
    lookup = _key_lookup(vertices, encode)
    raw = _field(doc, "rotation")
    if not isinstance(raw, dict):
        raise FormatError("'rotation' must be an object keyed by vertex")
    rotation: Dict[Any, List[Any]] = {v: [] for v in vertices}
    for key, neighbors in raw.items():
        if key not in lookup:
            raise FormatError(f"Rotation names an undeclared vertex {key!r}")
        if not isinstance(neighbors, list):
            raise FormatError(f"Rotation of {key!r} is not a list")
        rotation[lookup[key]] = [decode(x) for x in neighbors]
    try:
        E = EmbeddedGraph(rotation)
    except GraphStructureError as e:
        raise FormatError(f"Malformed rotation: {e}") from e
    if "edges" in doc:
        declared = _simple_graph(vertices, _decode_pairs(_list_field(doc, "edges"), decode))
        if {frozenset(e) for e in declared.edges} != {frozenset(e) for e in E.edges}:
            raise FormatError("'edges' and 'rotation' describe different graphs")
    return E


def encode_embedding(E: EmbeddedGraph) -> Dict[str, Any]:
    return envelope(EMBEDDED_GRAPH, **_rotation_fields(E, encode_vertex))


def decode_embedding(doc: Dict[str, Any]) -> EmbeddedGraph:
    check_envelope(doc, EMBEDDED_GRAPH)
    vertices = [decode_vertex(x) for x in _list_field(doc, "vertices")]
    return _decode_rotation(doc, vertices, decode_vertex, encode_vertex)


def encode_any_graph(graph) -> Dict[str, Any]:
    return encode_embedding(graph) if isinstance(graph, EmbeddedGraph) else encode_graph(graph)


def decode_any_graph(doc: Dict[str, Any]):
    doc_type = check_envelope(doc)
    if doc_type == EMBEDDED_GRAPH:
        return decode_embedding(doc)
    if doc_type == GRAPH:
        return decode_graph(doc)
    raise FormatError(f"Expected a graph document, got '{doc_type}'")


# ============================================================================
# Certificates
# ============================================================================

def _edges_out(edges) -> List[List[Any]]:
    return [[encode_vertex(u), encode_vertex(v)] for u, v in edges]


def _edges_in(items) -> List[tuple]:
    return [tuple(decode_vertex(x) for x in pair) for pair in items]


def _encode_outerpath(o: Outerpath) -> Dict[str, Any]:
    return {
        "boundary": [encode_vertex(v) for v in o.boundary],
        "triangles": [[encode_vertex(v) for v in t] for t in o.triangles],
        "diagonals": _edges_out(o.diagonals),
        "added_edges": _edges_out(sorted_edges(o.added_edges)),
        "source_faces": list(o.source_faces),
    }


def _decode_outerpath(doc: Dict[str, Any]) -> Outerpath:
    triangles = tuple(tuple(decode_vertex(x) for x in t) for t in _field(doc, "triangles"))
    if not triangles:
        raise FormatError("Outerpath has no triangles")
    return Outerpath(
        boundary=tuple(decode_vertex(x) for x in _field(doc, "boundary")),
        triangles=triangles,
        diagonals=tuple(_edges_in(_field(doc, "diagonals"))),
        ears=(triangles[0], triangles[-1]),
        added_edges=frozenset(_edges_in(doc.get("added_edges", []))),
        source_faces=tuple(doc.get("source_faces", [])),
    )


def encode_certificate(kind: str, graph, certificate) -> Dict[str, Any]:
    """Certificate document; the graph it certifies is embedded for replay"""
    if kind not in CERTIFICATE_TYPES or not isinstance(certificate, CERTIFICATE_TYPES[kind]):
        raise FormatError(f"Cannot encode {type(certificate).__name__} as a '{kind}' certificate")
    if kind == "two-outerpath":
        body = {
            "hamiltonian_cycle": [encode_vertex(v) for v in certificate.hamiltonian_cycle],
            "side_assignment": [certificate.side_assignment[f] for f in sorted(certificate.side_assignment)],
            "face_paths": [list(path) for path in certificate.face_paths],
            "outerpaths": [_encode_outerpath(o) for o in certificate.outerpaths],
        }
    elif kind == "path-copath":
        body = {
            "primal_path": [encode_vertex(v) for v in certificate.primal_path],
            "dual_path": list(certificate.dual_path),
            "dual_edges": _edges_out(certificate.dual_edges),
        }
    elif kind == "3color":
        body = {
            "c": certificate.c,
            "colors": [[encode_vertex(v), certificate.colors[v]] for v in sorted_vertices(certificate.colors)],
        }
    else:
        body = {"forests": [_edges_out(sorted_edges(forest)) for forest in certificate.forests]}
    return envelope(CERTIFICATE, kind=kind, graph=encode_any_graph(graph), certificate=body)


def decode_certificate(doc: Dict[str, Any]):
    """
    Returns:
        Tuple[str, graph, certificate]: kind, certified graph and certificate object
    """
    check_envelope(doc, CERTIFICATE)
    kind = _field(doc, "kind")
    graph = decode_any_graph(_field(doc, "graph"))
    body = _field(doc, "certificate")
    try:
        if kind == "two-outerpath":
            sides = body["side_assignment"]
            certificate = TwoOuterpathDecomposition(
                hamiltonian_cycle=tuple(decode_vertex(x) for x in body["hamiltonian_cycle"]),
                side_assignment={f: s for f, s in enumerate(sides)},
                face_paths=tuple(tuple(path) for path in body["face_paths"]),
                outerpaths=tuple(_decode_outerpath(o) for o in body["outerpaths"]),
            )
        elif kind == "path-copath":
            certificate = PathCopathDecomposition(
                primal_path=tuple(decode_vertex(x) for x in body["primal_path"]),
                dual_path=tuple(body["dual_path"]),
                dual_edges=tuple(_edges_in(body["dual_edges"])),
            )
        elif kind == "3color":
            colors = {decode_vertex(v): c for v, c in body["colors"]}
            certificate = ProperColoring(colors, body["c"])
        elif kind == "forests":
            certificate = ForestPartition(tuple(
                frozenset(edge_key(*e) for e in _edges_in(forest)) for forest in body["forests"]
            ))
        else:
            raise FormatError(f"Unknown certificate kind '{kind}'")
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"Malformed '{kind}' certificate: {e}") from e
    return kind, graph, certificate


# ============================================================================
# Drawings and decisions
# ============================================================================

def encode_image(image: ImageId) -> List[Any]:
    return [encode_vertex(image.vertex.base), image.vertex.copy, image.occurrence]


def decode_image(x: Any) -> ImageId:
    if not isinstance(x, list) or len(x) != 3 or not all(isinstance(i, int) for i in x[1:]):
        raise FormatError(f"Malformed image: {x!r}")
    return ImageId(BlowupVertex(decode_vertex(x[0]), x[1]), x[2])


def _image_record(image: ImageId) -> Dict[str, Any]:
    return {"base": encode_vertex(image.vertex.base), "copy": image.vertex.copy, "occ": image.occurrence}


def _image_from_record(record: Any) -> ImageId:
    try:
        return decode_image([record["base"], record["copy"], record["occ"]])
    except (KeyError, TypeError) as e:
        raise FormatError(f"Malformed image record: {record!r}") from e


def _encode_plane(plane: PlaneDrawing) -> Dict[str, Any]:
    fields = _rotation_fields(plane.embedding, encode_image)
    fields["images"] = [_image_record(image) for image in sorted_vertices(plane.images)]
    del fields["vertices"]
    return fields


def _decode_plane(doc: Any) -> PlaneDrawing:
    if not isinstance(doc, dict):
        raise FormatError("Plane is not a JSON object")
    images = [_image_from_record(record) for record in _list_field(doc, "images")]
    return PlaneDrawing(_decode_rotation(doc, images, decode_image, encode_image))


def _encode_metadata(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _encode_metadata(v) for key, v in value.items()}
    if isinstance(value, tuple):
        return [_encode_metadata(v) for v in value]
    return value


def _decode_metadata(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _decode_metadata(v) for key, v in value.items()}
    if isinstance(value, list):
        return tuple(_decode_metadata(v) for v in value)
    return value


def encode_drawing(drawing: LayeredDrawing) -> Dict[str, Any]:
    return envelope(
        DRAWING,
        kind={drawing.kind.name: drawing.kind.value},
        closed=drawing.closed,
        target=encode_graph(drawing.target),
        metadata=_encode_metadata(dict(drawing.metadata)),
        planes=[_encode_plane(plane) for plane in drawing.planes],
    )


def decode_drawing(doc: Dict[str, Any]) -> LayeredDrawing:
    check_envelope(doc, DRAWING)
    kind = _field(doc, "kind")
    if not isinstance(kind, dict) or len(kind) != 1:
        raise FormatError(f"Malformed drawing kind: {kind!r}")
    (name, value), = kind.items()
    drawing_kind = DrawingKind(name, value)
    if not (drawing_kind.is_thickness or drawing_kind.is_split) or not isinstance(value, int):
        raise FormatError(f"Unknown drawing kind {kind!r}")
    return LayeredDrawing(
        kind=drawing_kind,
        planes=tuple(_decode_plane(plane) for plane in _list_field(doc, "planes")),
        target=decode_graph(_field(doc, "target")),
        closed=bool(doc.get("closed", False)),
        metadata=_decode_metadata(doc.get("metadata", {})),
    )


def encode_decision(question: str, result) -> Dict[str, Any]:
    return envelope(
        DECISION,
        question=question,
        answer=result.answer.value,
        nodes=result.nodes,
        reason=result.reason,
        certificate=encode_drawing(result.certificate) if result.certificate is not None else None,
    )


# ============================================================================
# Files
# ============================================================================

def write_document(doc: Dict[str, Any], path: str) -> str:
    """Write a document as UTF-8 JSON; returns the path written"""
    ensure_directory(os.path.dirname(path))
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps_json(doc))
    logger.info(f"Wrote {doc.get('type')} document to {path}")
    return path


def read_document(path: str, expected: Optional[str] = None) -> Dict[str, Any]:
    """
    Raises:
        FormatError: unreadable file, invalid JSON, or wrong version/type
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise FormatError(f"Cannot read {path}: {e}") from e
    check_envelope(doc, expected)
    return doc


def default_output_path(name: str) -> str:
    return os.path.join(get_config().output_dir, name)
