"""Ball-cover graphs for exploring multidimensional point clouds.

The pipeline: load a table into a point cloud plus an outcome vector,
cover the cloud with epsilon-balls around greedily chosen landmarks,
connect balls that share points, color each ball by an aggregate of the
outcome, then lay the graph out and render or export it.

    import tdabm

    pc, y = tdabm.load_table("data.csv", ["X1", "X2"], "Y")
    cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=0.4))
    graph = tdabm.color_graph(tdabm.build_graph(cover), cover, y)
    svg = tdabm.render_svg(graph, tdabm.spring_layout(graph))

All row and ball indices are 1-based, in input order.
"""

from .cover import (Ball, Cover, CoverConfig, GridIndex, ball_membership,
                    build_cover, coverage_map)
from .datasets import make_uniform_table, table_to_csv
from .errors import IngestError, MismatchError, TdabmError
from .export import (from_json, to_csv_points_to_balls, to_dot, to_graphml,
                     to_json)
from .graph import (Edge, GraphSummary, MapperGraph, Vertex, aggregate,
                    build_graph, color_graph, graph_summary, points_to_balls,
                    set_coloring)
from .ingest import (OutcomeVector, PointCloud, column_values, load_table,
                     load_table_with_frame, normalize, read_frame)
from .layout import LayoutResult, SizeScale, size_scale, spring_layout
from .render import (PALETTES, RenderSpec, color_bin, color_of, palette_color,
                     render_svg)

__version__ = "0.1.0"

__all__ = [
    "Ball", "Cover", "CoverConfig", "GridIndex", "ball_membership",
    "build_cover", "coverage_map",
    "make_uniform_table", "table_to_csv",
    "IngestError", "MismatchError", "TdabmError",
    "from_json", "to_csv_points_to_balls", "to_dot", "to_graphml", "to_json",
    "Edge", "GraphSummary", "MapperGraph", "Vertex", "aggregate",
    "build_graph", "color_graph", "graph_summary", "points_to_balls",
    "set_coloring",
    "OutcomeVector", "PointCloud", "column_values", "load_table",
    "load_table_with_frame", "normalize", "read_frame",
    "LayoutResult", "SizeScale", "size_scale", "spring_layout",
    "PALETTES", "RenderSpec", "color_bin", "color_of", "palette_color",
    "render_svg",
    "__version__",
]
