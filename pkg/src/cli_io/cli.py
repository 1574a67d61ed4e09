"""
Command-line interface: generate graphs, search certificates, build and check drawings,
run the deciders and export SVG.

Exit codes: 0 success, 1 usage or invalid input, 2 validation failure, 3 no
certificate exists / answer no, 4 unknown (budget exhausted).
"""

import argparse
import logging
import os
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import networkx as nx

from cli_io.serialization import (
    REPORT, decode_any_graph, decode_certificate, decode_drawing, default_output_path, encode_any_graph,
    encode_certificate, encode_decision, encode_drawing, envelope, read_document, write_document,
)
from cli_io.svg_export import export_svg
from constructions.blowup import blowup, multiplicity
from constructions.generators import GENERATORS, embedded, named_graph
from constructions.kleetope import iterated_kleetope
from decompositions.coloring import three_color, two_color
from decompositions.forests import forest_partition
from decompositions.path_copath import find_path_copath
from decompositions.two_outerpath import find_two_outerpath
from drawings.coloring_drawings import draw_bipartite_thicknessk, draw_coloring_splitk
from drawings.forest_drawing import draw_bipartite_forest_biplanar, draw_forest_closed_blowup
from drawings.model import LayeredDrawing, biplanar_to_split2
from drawings.outerpath_drawings import (
    draw_kleetope_split2, draw_path_copath_split2, draw_two_outerpath_biplanar,
)
from graph_core.embedding import EmbeddedGraph
from utils.config import get_config, get_search_config, load_config, setup_logging
from utils.exceptions import InternalConsistencyError, VerificationError
from utils.helpers import ErrorContext, get_error_details, timer
from utils.search import SearchBudget, SearchResult, SearchStatus
from verification.deciders import Answer, decide_biplanar, decide_planar, decide_split2
from verification.excess import excess_report
from verification.neighborhoods import octahedron_triangle_partitions, triangulated_neighborhoods
from verification.reports import drawing_summary
from verification.validate import validate_drawing

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NONE = 3
EXIT_UNKNOWN = 4

_SEARCH_EXIT = {SearchStatus.FOUND: EXIT_OK, SearchStatus.NONE: EXIT_NONE, SearchStatus.UNKNOWN: EXIT_UNKNOWN}
_ANSWER_EXIT = {Answer.YES: EXIT_OK, Answer.NO: EXIT_NONE, Answer.UNKNOWN: EXIT_UNKNOWN}


# ============================================================================
# Input helpers
# ============================================================================

def _load_graph(path: str):
    """Graph or embedded graph stored in a graph document"""
    return decode_any_graph(read_document(path))


def _abstract(graph) -> nx.Graph:
    return graph.graph if isinstance(graph, EmbeddedGraph) else graph


def _embedding(graph) -> EmbeddedGraph:
    return graph if isinstance(graph, EmbeddedGraph) else embedded(graph)


def _budget(args) -> SearchBudget:
    search = get_search_config()
    return SearchBudget(args.budget or search.node_budget, search.time_limit_seconds)


def _input_path(args) -> str:
    """Graph file given positionally or with --input"""
    if args.graph and args.input and args.graph != args.input:
        raise VerificationError("Give the graph file once, positionally or with --input")
    path = args.graph or args.input
    if not path:
        raise VerificationError(f"{args.command} needs a graph file")
    return path


def budget_value(text: str) -> int:
    """Node budget from the command line; accepts integer or float notation such as 1e9"""
    try:
        value = int(float(text))
    except (ValueError, OverflowError):
        raise argparse.ArgumentTypeError(f"invalid budget: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"budget must be positive, got {text!r}")
    return value


def _output(args, name: str) -> str:
    return args.output or default_output_path(name)


def _stem(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _print_drawing(drawing: LayeredDrawing) -> None:
    print(f"{drawing.kind} drawing of {drawing.target.number_of_nodes()} vertices, "
          f"{drawing.num_edges} edges on {len(drawing.planes)} plane(s)")
    print(drawing_summary(drawing).to_string(index=False))


# ============================================================================
# generate
# ============================================================================

OPERATORS = ("kleetope", "blowup")


def cmd_generate(args) -> int:
    """
    Named graphs are built from the registry; the operator names `kleetope` and
    `blowup` apply to the graph stored at --input. --iterations and -k may also be
    combined with any source.
    """
    if args.name in OPERATORS:
        if not args.input:
            raise VerificationError(f"generate {args.name} needs --input")
        graph = _load_graph(args.input)
        name = f"{_stem(args.input)}-{args.name}"
    elif args.input:
        if args.name:
            raise VerificationError("generate takes a graph name or --input, not both")
        graph = _load_graph(args.input)
        name = _stem(args.input)
    elif args.name:
        graph = named_graph(args.name, *args.params)
        name = args.name
    else:
        raise VerificationError("generate needs a graph name or --input")

    iterations = args.iterations
    if args.name == "kleetope":
        iterations = 1 if iterations is None else iterations
        if iterations < 1:
            raise VerificationError("generate kleetope needs at least one iteration")
    if args.name == "blowup" and args.k is None:
        raise VerificationError("generate blowup needs -k")

    if iterations:
        graph = iterated_kleetope(_embedding(graph), iterations)
    if args.k is not None:
        graph = blowup(_abstract(graph), args.k, closed=args.closed)

    G = _abstract(graph)
    print(f"Graph with {G.number_of_nodes()} vertices and {G.number_of_edges()} edges")
    write_document(encode_any_graph(graph), _output(args, f"{name}.json"))
    return EXIT_OK


# ============================================================================
# decompose
# ============================================================================

def _search(kind: str, graph, args) -> SearchResult:
    budget = _budget(args)
    if kind == "two-outerpath":
        return find_two_outerpath(_embedding(graph), budget)
    if kind == "path-copath":
        return find_path_copath(_embedding(graph), budget)
    if kind == "3color":
        return three_color(_abstract(graph), budget)
    if kind == "2color":
        return two_color(_abstract(graph), budget)
    return forest_partition(_abstract(graph), args.a, budget, get_search_config().forest_greedy_first)


def _certificate_kind(kind: str) -> str:
    return "3color" if kind == "2color" else kind


def cmd_decompose(args) -> int:
    args.input = _input_path(args)
    graph = _load_graph(args.input)
    # two-outerpath and path-copath certificates refer to the embedding they were found on
    if args.kind in ("two-outerpath", "path-copath"):
        graph = _embedding(graph)
    with timer(f"{args.kind} search"):
        result = _search(args.kind, graph, args)
    print(f"{args.kind}: {result.status.value} after {result.nodes} nodes ({result.reason})")
    if result.found:
        doc = encode_certificate(_certificate_kind(args.kind), graph, result.certificate)
        write_document(doc, _output(args, f"{_stem(args.input)}-{args.kind}.json"))
    return _SEARCH_EXIT[result.status]


# ============================================================================
# draw
# ============================================================================

class Construction(NamedTuple):
    certificate: Optional[str]
    needs_embedding: bool
    draw: Callable


CONSTRUCTIONS: Dict[str, Construction] = {
    "two-outerpath": Construction("two-outerpath", True, lambda g, c, a: draw_two_outerpath_biplanar(g, c)),
    "kleetope": Construction("two-outerpath", True, lambda g, c, a: draw_kleetope_split2(g, c)),
    "path-copath": Construction("path-copath", True, lambda g, c, a: draw_path_copath_split2(g, c)),
    "coloring": Construction("3color", False, lambda g, c, a: draw_coloring_splitk(g, c, a.k)),
    "bipartite": Construction("2color", False, lambda g, c, a: draw_bipartite_thicknessk(g, c, a.k)),
    "forest": Construction("forests", False, lambda g, c, a: draw_forest_closed_blowup(g, c)),
    "bipartite-forest": Construction(None, False,
                                     lambda g, c, a: draw_bipartite_forest_biplanar(g, _budget(a))),
}


def cmd_draw(args) -> int:
    construction = CONSTRUCTIONS[args.construction]
    certificate = None
    graph = None
    if args.certificate:
        kind, graph, certificate = decode_certificate(read_document(args.certificate))
        expected = construction.certificate and _certificate_kind(construction.certificate)
        if kind != expected:
            raise VerificationError(f"'{args.construction}' needs a {expected} certificate, got {kind}")
    if graph is None and args.input:
        graph = _load_graph(args.input)
    if graph is None:
        raise VerificationError("draw needs --input or --certificate")
    graph = _embedding(graph) if construction.needs_embedding else _abstract(graph)

    if certificate is None and construction.certificate is not None:
        result = _search(construction.certificate, graph, args)
        if not result.found:
            print(f"No {construction.certificate} certificate: {result.status.value} ({result.reason})")
            return _SEARCH_EXIT[result.status]
        certificate = result.certificate

    with timer(f"{args.construction} drawing"):
        drawing = construction.draw(graph, certificate, args)
    if args.as_split:
        drawing = biplanar_to_split2(drawing)

    report = validate_drawing(drawing)
    if not report.valid:
        print(f"Drawing failed validation: {report.first_violation}")
        return EXIT_INVALID
    _print_drawing(drawing)
    name = args.name or f"{args.construction}-drawing"
    write_document(encode_drawing(drawing), _output(args, f"{name}.json"))
    return EXIT_OK


# ============================================================================
# verify
# ============================================================================

def cmd_verify(args) -> int:
    if args.octahedron:
        report = octahedron_triangle_partitions()
        print(f"Octahedron: {len(report.partitions)} edge partitions into triangles among "
              f"{report.candidates_checked} candidates; covering assignments: {report.covering_assignments}")
        if not args.drawing:
            return EXIT_OK
    if not args.drawing:
        raise VerificationError("verify needs a drawing file or --octahedron")

    drawing = decode_drawing(read_document(args.drawing))
    validation = validate_drawing(drawing)
    fields = {"valid": validation.valid, "violations": list(validation.violations)}
    if not validation.valid:
        for violation in validation.violations:
            print(f"  {violation}")
        print("INVALID")
    else:
        _print_drawing(drawing)
        excess = excess_report(drawing)
        print(f"Total excess {excess.total_excess}; edge bound {excess.max_edges}; "
              f"non-triangle images {excess.nontriangle_images} <= {excess.nontriangle_vertex_bound}")
        fields.update(total_excess=excess.total_excess, max_edges=excess.max_edges,
                      nontriangle_images=excess.nontriangle_images, formula_total=excess.formula_total)
        if args.neighborhoods and multiplicity(drawing.target) == 2:
            found = triangulated_neighborhoods(drawing)
            print(f"Vertices with triangulated neighborhoods: {len(found.vertices)}")
            fields["triangulated_neighborhoods"] = len(found.vertices)
        print("VALID")

    if args.output:
        write_document(envelope(REPORT, **fields), args.output)
    return EXIT_OK if validation.valid else EXIT_INVALID


# ============================================================================
# decide
# ============================================================================

def cmd_decide(args) -> int:
    args.input = _input_path(args)
    G = _abstract(_load_graph(args.input))
    budget = SearchBudget(args.budget) if args.budget else None
    with timer(f"{args.question} decision"):
        if args.question == "planar":
            result = decide_planar(G)
        elif args.question == "biplanar":
            result = decide_biplanar(G, budget, max_workers=args.workers)
        else:
            result = decide_split2(G, budget)
    print(f"{args.question}: {result.answer.value} after {result.nodes} nodes ({result.reason})")
    if args.output or result.answer is Answer.YES:
        write_document(encode_decision(args.question, result),
                       _output(args, f"{_stem(args.input)}-{args.question}.json"))
    return _ANSWER_EXIT[result.answer]


# ============================================================================
# export-svg
# ============================================================================

def cmd_export_svg(args) -> int:
    drawing = decode_drawing(read_document(args.drawing))
    report = validate_drawing(drawing)
    if not report.valid:
        print(f"Refusing to export an invalid drawing: {report.first_violation}")
        return EXIT_INVALID
    path = export_svg(drawing, _output(args, f"{_stem(args.drawing)}.svg"))
    print(f"Wrote {path}")
    return EXIT_OK


# ============================================================================
# Parser and entry point
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphlab", description="Layered drawings of graph blowups")
    parser.add_argument("--config", help="JSON or YAML configuration file")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-file", help="also log to this file (relative names go under the logs directory)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a named graph, Kleetope or blowup")
    p.add_argument("name", nargs="?", help=f"one of: {', '.join((*GENERATORS, *OPERATORS))}")
    p.add_argument("params", nargs="*", type=int, help="size parameters of the named graph")
    p.add_argument("--input", help="start from a stored graph instead of a name")
    p.add_argument("--iterations", type=int, help="Kleetope iterations (default 1 for kleetope)")
    p.add_argument("-k", type=int, help="blowup multiplicity")
    p.add_argument("--closed", action="store_true", help="closed blowup")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("decompose", help="search for a decomposition certificate")
    p.add_argument("kind", choices=["two-outerpath", "path-copath", "3color", "2color", "forests"])
    p.add_argument("graph", nargs="?", help="graph document")
    p.add_argument("--input", help="graph document (same as the positional argument)")
    p.add_argument("--budget", type=budget_value, help="search node budget")
    p.add_argument("-a", type=int, default=3, help="number of forests")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("draw", help="build and validate a layered drawing")
    p.add_argument("construction", choices=list(CONSTRUCTIONS))
    p.add_argument("--input", help="graph document")
    p.add_argument("--certificate", help="certificate document (searched for when omitted)")
    p.add_argument("-k", type=int, default=2, help="copies per vertex for coloring constructions")
    p.add_argument("-a", type=int, default=3, help="number of forests when searching")
    p.add_argument("--budget", type=budget_value, help="search node budget")
    p.add_argument("--as-split", action="store_true", help="merge a biplanar drawing into one split plane")
    p.add_argument("--name", help="output name")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_draw)

    p = sub.add_parser("verify", help="validate a drawing and report its excess")
    p.add_argument("drawing", nargs="?")
    p.add_argument("--neighborhoods", action="store_true", help="report triangulated neighborhoods")
    p.add_argument("--octahedron", action="store_true", help="check the octahedron triangle partitions")
    p.add_argument("-o", "--output", help="write a report document")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("decide", help="decide planarity, biplanarity or split thickness two")
    p.add_argument("question", choices=["planar", "biplanar", "split2"])
    p.add_argument("graph", nargs="?", help="graph document")
    p.add_argument("--input", help="graph document (same as the positional argument)")
    p.add_argument("--budget", type=budget_value, help="search node budget")
    p.add_argument("--workers", type=int, help="threads for the biplanarity search")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("export-svg", help="render a drawing as SVG")
    p.add_argument("drawing")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_export_svg)

    return parser


def exit_code_for(error: Exception) -> int:
    """Constructed objects failing their own checks count as validation failures"""
    return EXIT_INVALID if isinstance(error, InternalConsistencyError) else EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.config:
        load_config(args.config)
    setup_logging(args.log_level, args.log_file)
    logger.debug(f"{get_config().app_name} {get_config().app_version}: {args.command}")

    outcome: List[int] = [EXIT_OK]

    def on_error(error: Exception) -> None:
        details = get_error_details(error)
        logger.error(f"{args.command} failed: {details['type']}: {details['message']}")
        print(f"Error: {details['message']}")
        outcome[0] = exit_code_for(error)

    with ErrorContext(on_error=on_error, reraise=False):
        outcome[0] = args.handler(args)
    return outcome[0]
