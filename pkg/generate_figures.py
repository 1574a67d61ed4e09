"""
Regenerate every drawing pipeline into output/ as JSON documents, SVG figures and a
summary table.
"""

import os
import sys

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

import pandas as pd

from cli_io.serialization import encode_drawing, write_document
from cli_io.svg_export import export_svg
from constructions.generators import cube, icosahedron, octahedron, tetrahedron, wheel
from decompositions.coloring import three_color, two_color
from decompositions.forests import forest_partition
from decompositions.path_copath import find_path_copath
from decompositions.two_outerpath import find_two_outerpath
from drawings.coloring_drawings import draw_bipartite_thicknessk, draw_coloring_splitk
from drawings.forest_drawing import draw_bipartite_forest_biplanar, draw_forest_closed_blowup
from drawings.outerpath_drawings import draw_kleetope_split2, draw_path_copath_split2, draw_two_outerpath_biplanar
from utils.config import get_config, setup_logging
from utils.helpers import ensure_directory, timer
from verification.excess import excess_report
from verification.validate import validate_drawing


def figure_pipelines():
    """Name -> zero-argument builder of a drawing"""
    ico, octa, tet = icosahedron(), octahedron(), tetrahedron()
    return {
        "icosahedron-two-outerpath": lambda: draw_two_outerpath_biplanar(ico, find_two_outerpath(ico)),
        "icosahedron-kleetope": lambda: draw_kleetope_split2(ico, find_two_outerpath(ico)),
        "tetrahedron-kleetope": lambda: draw_kleetope_split2(tet, find_two_outerpath(tet)),
        "octahedron-path-copath": lambda: draw_path_copath_split2(octa, find_path_copath(octa)),
        "octahedron-coloring-3": lambda: draw_coloring_splitk(octa.graph, three_color(octa.graph), 3),
        "cube-bipartite-2": lambda: draw_bipartite_thicknessk(cube().graph, two_color(cube().graph), 2),
        "cube-bipartite-forest": lambda: draw_bipartite_forest_biplanar(cube().graph),
        "wheel-forest": lambda: draw_forest_closed_blowup(wheel(7), forest_partition(wheel(7), 2)),
    }


def generate_figures(output_dir=None):
    """Build, validate and export every figure; returns the summary table"""
    output_dir = output_dir or get_config().output_dir
    ensure_directory(output_dir)
    rows = []

    for name, build in figure_pipelines().items():
        print(f"Building {name}...")
        with timer(name):
            drawing = build()
        report = validate_drawing(drawing)
        if not report.valid:
            print(f"  {name} failed validation: {report.first_violation}")
            continue
        excess = excess_report(drawing)
        write_document(encode_drawing(drawing), os.path.join(output_dir, f"{name}.json"))
        export_svg(drawing, os.path.join(output_dir, f"{name}.svg"))
        rows.append({
            'figure': name,
            'kind': str(drawing.kind),
            'vertices': drawing.target.number_of_nodes(),
            'edges': drawing.num_edges,
            'excess': excess.total_excess,
        })

    summary = pd.DataFrame(rows)
    summary.to_csv(os.path.join(output_dir, 'figures.csv'), index=False)
    print(f"Generated {len(rows)} figures in {output_dir}")
    return summary


if __name__ == "__main__":
    setup_logging()
    print(generate_figures().to_string(index=False))
