"""Command-line pipeline: build, recolor, sweep, fixture.

Option values resolve with the usual precedence: command-line flags beat
``TDABM_*`` environment variables, which beat entries from an optional
``key=value`` config file passed via ``--config`` (or ``TDABM_CONFIG``).
"""

from __future__ import annotations

import functools
from pathlib import Path

import click

from . import export as exporters
from . import fileio, ingest
from .cover import STRATEGIES, CoverConfig, build_cover
from .datasets import FORMULAS, make_uniform_table, table_to_csv
from .errors import MismatchError, TdabmError
from .graph import (AGGREGATIONS, build_graph, color_graph, graph_summary,
                    points_to_balls)
from .layout import DEFAULT_LAYOUT_SEED, SizeScale, spring_layout
from .render import PALETTES, RenderSpec, render_svg

_COMMANDS = ("build", "recolor", "sweep", "fixture")


def _read_config(ctx, param, value):
    if not value:
        return None
    path = Path(value)
    if not path.is_file():
        raise click.BadParameter(f"config file not found: {value}")
    pairs = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise click.BadParameter(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        pairs[key.strip().replace("-", "_")] = val.strip()
    # config supplies defaults only; flags and env vars still win
    ctx.default_map = {cmd: dict(pairs) for cmd in _COMMANDS}
    return None


def _positive(ctx, param, value):
    if value is not None and not value > 0:
        raise click.BadParameter("must be > 0")
    return value


def _positive_int(ctx, param, value):
    if value is not None and value < 1:
        raise click.BadParameter("must be >= 1")
    return value


def _parse_axes(ctx, param, value):
    if value is None:
        return None
    names = tuple(tok.strip() for tok in value.split(",") if tok.strip())
    if not names:
        raise click.BadParameter("expected a comma-separated list of column names")
    return names


def _parse_size_range(ctx, param, value):
    try:
        lo, hi = (float(tok) for tok in value.split(","))
    except ValueError:
        raise click.BadParameter("expected two comma-separated numbers, e.g. 7,20")
    if not 0 < lo <= hi:
        raise click.BadParameter("need 0 < min <= max")
    return lo, hi


def _parse_radii(ctx, param, value):
    tokens = [tok.strip() for tok in value.split(",") if tok.strip()]
    if not tokens:
        raise click.BadParameter("expected a comma-separated list of radii")
    radii: list[tuple[str, float]] = []
    seen: set[float] = set()
    for tok in tokens:
        try:
            eps = float(tok)
        except ValueError:
            raise click.BadParameter(f"{tok!r} is not a number")
        if not eps > 0:
            raise click.BadParameter("all radii must be > 0")
        if eps in seen:
            click.echo(f"warning: duplicate radius {tok} ignored", err=True)
            continue
        seen.add(eps)
        radii.append((tok, eps))
    return radii


def _friendly_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except TdabmError as exc:
            raise click.ClickException(str(exc))
        except (ValueError, OSError) as exc:
            raise click.ClickException(str(exc))

    return wrapper


def _input_options(fn):
    fn = click.option("--na-policy", type=click.Choice(ingest.NA_POLICIES),
                      default="error", show_default=True, envvar="TDABM_NA_POLICY",
                      help="What to do with missing/non-numeric cells.")(fn)
    fn = click.option("--delimiter", default=",", show_default=True,
                      envvar="TDABM_DELIMITER", help="CSV field delimiter.")(fn)
    fn = click.option("--input", "input_path", required=True, envvar="TDABM_INPUT",
                      help="CSV table with a header row.")(fn)
    return fn


def _table_options(fn):
    fn = click.option("--normalize", type=click.Choice(ingest.NORMALIZATIONS),
                      default="none", show_default=True, envvar="TDABM_NORMALIZE",
                      help="Rescale axis columns before covering.")(fn)
    fn = click.option("--outcome", required=True, envvar="TDABM_OUTCOME",
                      help="Outcome column name.")(fn)
    fn = click.option("--axes", required=True, callback=_parse_axes,
                      envvar="TDABM_AXES", help="Comma-separated axis column names.")(fn)
    return fn


def _cover_options(fn):
    fn = click.option("--seed", type=int, default=0, show_default=True,
                      envvar="TDABM_SEED",
                      help="Seed for --strategy random landmark draws.")(fn)
    fn = click.option("--strategy", type=click.Choice(STRATEGIES),
                      default="lowest-index", show_default=True,
                      envvar="TDABM_STRATEGY", help="Landmark selection rule.")(fn)
    return fn


def _color_options(fn):
    fn = click.option("--color-by", default=None, envvar="TDABM_COLOR_BY",
                      help="Column to color by (raw values; default: the outcome).")(fn)
    fn = click.option("--agg", type=click.Choice(AGGREGATIONS), default="mean",
                      show_default=True, envvar="TDABM_AGG",
                      help="Per-ball aggregation for coloring.")(fn)
    return fn


def _render_options(fn):
    fn = click.option("--layout-seed", type=int, default=DEFAULT_LAYOUT_SEED,
                      show_default=True, envvar="TDABM_LAYOUT_SEED",
                      help="Seed for the spring layout.")(fn)
    fn = click.option("--height", type=int, default=512, show_default=True,
                      envvar="TDABM_HEIGHT", help="Image height in px.")(fn)
    fn = click.option("--width", type=int, default=512, show_default=True,
                      envvar="TDABM_WIDTH", help="Image width in px.")(fn)
    fn = click.option("--palette", type=click.Choice(sorted(PALETTES)),
                      default="viridis", show_default=True, envvar="TDABM_PALETTE",
                      help="Color ramp for vertex fills.")(fn)
    fn = click.option("--n-colors", type=int, default=100, show_default=True,
                      envvar="TDABM_N_COLORS", callback=_positive_int,
                      help="Number of color bins.")(fn)
    fn = click.option("--size-range", default="7,20", show_default=True,
                      callback=_parse_size_range, envvar="TDABM_SIZE_RANGE",
                      help="min,max vertex display size.")(fn)
    fn = click.option("--legend/--no-legend", "legend", default=False,
                      show_default=True, help="List the balls beside the plot.")(fn)
    fn = click.option("--labels/--no-labels", "labels", default=True,
                      show_default=True, help="Draw ball ids on the vertices.")(fn)
    return fn


def _output_options(fn):
    for name in ("p2b", "graphml", "dot", "json", "svg"):
        fn = click.option(f"--out-{name}", f"out_{name}",
                          type=click.Path(dir_okay=False, writable=True),
                          default=None, help=f"Write {name.upper()} output here.")(fn)
    return fn


def _make_spec(labels, legend, n_colors, width, height, palette, size_range) -> RenderSpec:
    return RenderSpec(
        show_labels=labels,
        show_legend=legend,
        n_colors=n_colors,
        width_px=width,
        height_px=height,
        palette=palette,
        size=SizeScale(*size_range),
    )


def _write_outputs(cover, graph, spec, layout_seed, out_svg, out_json, out_dot,
                   out_graphml, out_p2b) -> None:
    if out_svg:
        layout = spring_layout(graph, seed=layout_seed)
        fileio.write_bytes(out_svg, render_svg(graph, layout, spec))
    if out_json:
        fileio.write_text(out_json, exporters.to_json(cover, graph))
    if out_dot:
        fileio.write_text(out_dot, exporters.to_dot(graph))
    if out_graphml:
        fileio.write_text(out_graphml, exporters.to_graphml(graph))
    if out_p2b:
        fileio.write_text(out_p2b, exporters.to_csv_points_to_balls(points_to_balls(cover)))


def _echo_summary(graph) -> None:
    for line in graph_summary(graph).lines():
        click.echo(line)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", envvar="TDABM_CONFIG", is_eager=True, expose_value=False,
              callback=_read_config,
              help="Optional key=value file with default option values.")
@click.version_option(package_name="tdabm")
def main():
    """Cover a point cloud with epsilon-balls and map it as a colored graph."""


@main.command()
@_input_options
@_table_options
@_cover_options
@click.option("--epsilon", type=float, required=True, callback=_positive,
              envvar="TDABM_EPSILON", help="Ball radius (after normalization).")
@_color_options
@_render_options
@_output_options
@_friendly_errors
def build(input_path, delimiter, na_policy, axes, outcome, normalize, strategy,
          seed, epsilon, agg, color_by, labels, legend, size_range, n_colors,
          palette, width, height, layout_seed, out_svg, out_json, out_dot,
          out_graphml, out_p2b):
    """Build the cover and graph for one radius and write the outputs."""
    pc, outcome_vec, frame = ingest.load_table_with_frame(
        input_path, list(axes), outcome, na_policy=na_policy, delimiter=delimiter)
    pc = ingest.normalize(pc, normalize)
    cover = build_cover(pc, CoverConfig(epsilon=epsilon, strategy=strategy, seed=seed))
    graph = build_graph(cover)
    values = ingest.column_values(frame, color_by or outcome)
    graph = color_graph(graph, cover, values, agg)
    spec = _make_spec(labels, legend, n_colors, width, height, palette, size_range)
    _write_outputs(cover, graph, spec, layout_seed, out_svg, out_json, out_dot,
                   out_graphml, out_p2b)
    _echo_summary(graph)


@main.command()
@click.option("--graph-json", required=True, envvar="TDABM_GRAPH_JSON",
              type=click.Path(exists=False, dir_okay=False),
              help="JSON document produced by build/sweep.")
@_input_options
@click.option("--column", required=True, envvar="TDABM_COLUMN",
              help="Column of the input table to color by.")
@click.option("--agg", type=click.Choice(AGGREGATIONS), default="mean",
              show_default=True, envvar="TDABM_AGG",
              help="Per-ball aggregation for the new coloring.")
@_render_options
@_output_options
@_friendly_errors
def recolor(graph_json, input_path, delimiter, na_policy, column, agg, labels,
            legend, size_range, n_colors, palette, width, height, layout_seed,
            out_svg, out_json, out_dot, out_graphml, out_p2b):
    """Re-color an existing graph from its JSON without rebuilding the cover."""
    path = Path(graph_json)
    if not path.is_file():
        raise click.ClickException(f"graph JSON not found: {graph_json}")
    cover, graph = exporters.from_json(path.read_text(encoding="utf-8"))
    frame = ingest.read_frame(input_path, delimiter)
    if len(frame) != cover.n_points:
        raise MismatchError(
            f"table has {len(frame)} rows but the graph was built over "
            f"{cover.n_points} points"
        )
    values = ingest.column_values(frame, column)
    graph = color_graph(graph, cover, values, agg)
    spec = _make_spec(labels, legend, n_colors, width, height, palette, size_range)
    _write_outputs(cover, graph, spec, layout_seed, out_svg, out_json, out_dot,
                   out_graphml, out_p2b)
    _echo_summary(graph)


@main.command()
@_input_options
@_table_options
@_cover_options
@click.option("--radii", required=True, callback=_parse_radii, envvar="TDABM_RADII",
              help="Comma-separated list of ball radii, e.g. 0.2,0.4,0.8.")
@_color_options
@_render_options
@click.option("--out-dir", type=click.Path(file_okay=False), default=".",
              show_default=True, envvar="TDABM_OUT_DIR",
              help="Directory for per-radius outputs and summary.csv.")
@_friendly_errors
def sweep(input_path, delimiter, na_policy, axes, outcome, normalize, strategy,
          seed, radii, agg, color_by, labels, legend, size_range, n_colors,
          palette, width, height, layout_seed, out_dir):
    """Build one graph per radius and a summary table across radii."""
    pc, outcome_vec, frame = ingest.load_table_with_frame(
        input_path, list(axes), outcome, na_policy=na_policy, delimiter=delimiter)
    pc = ingest.normalize(pc, normalize)
    values = ingest.column_values(frame, color_by or outcome)
    spec = _make_spec(labels, legend, n_colors, width, height, palette, size_range)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    rows = ["epsilon,balls,edges"]
    for token, eps in radii:
        cover = build_cover(pc, CoverConfig(epsilon=eps, strategy=strategy, seed=seed))
        graph = color_graph(build_graph(cover), cover, values, agg)
        layout = spring_layout(graph, seed=layout_seed)
        fileio.write_text(out / f"eps_{token}.json", exporters.to_json(cover, graph))
        fileio.write_bytes(out / f"eps_{token}.svg", render_svg(graph, layout, spec))
        rows.append(f"{token},{len(graph.vertices)},{len(graph.edges)}")
        click.echo(f"epsilon={token}: balls={len(graph.vertices)} edges={len(graph.edges)}")
    fileio.write_text(out / "summary.csv", "\n".join(rows) + "\n")


@main.command()
@click.option("--n", type=int, required=True, callback=_positive_int,
              envvar="TDABM_N", help="Number of rows.")
@click.option("--k", type=int, default=2, show_default=True, callback=_positive_int,
              envvar="TDABM_K", help="Number of axis columns.")
@click.option("--seed", type=int, default=0, show_default=True, envvar="TDABM_SEED",
              help="RNG seed.")
@click.option("--formula", type=click.Choice(FORMULAS), default="sum",
              show_default=True, envvar="TDABM_FORMULA",
              help="How the outcome is computed from the axes.")
@click.option("--out", "out_path", required=True,
              type=click.Path(dir_okay=False, writable=True),
              help="Where to write the CSV.")
@_friendly_errors
def fixture(n, k, seed, formula, out_path):
    """Write a synthetic uniform dataset with an outcome column."""
    frame = make_uniform_table(n, k=k, seed=seed, formula=formula)
    fileio.write_text(out_path, table_to_csv(frame))
    click.echo(f"wrote {out_path}: {n} rows, {k} axes, outcome={formula}")


if __name__ == "__main__":
    main()
