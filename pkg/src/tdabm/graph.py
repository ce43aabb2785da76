"""The ball-intersection graph: vertices, weighted edges, and coloring.

Vertices are balls (sized by how many points they hold); an edge joins two
balls exactly when their member sets intersect, with the intersection size
as edge strength. Colors are per-ball aggregates of any value aligned to
the point-cloud rows.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .cover import Cover

AGGREGATIONS = ("mean", "sd", "min", "max", "median", "count")


@dataclass(frozen=True)
class Vertex:
    id: int
    size: int
    color: float | None = None


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    strength: int


@dataclass(frozen=True)
class MapperGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    landmarks: tuple[int, ...]

    @property
    def coloring(self) -> list[float] | None:
        """Vertex colors in ball-id order, or None while uncolored."""
        colors = [v.color for v in self.vertices]
        if any(c is None for c in colors):
            return None
        return colors

    def edge_between(self, a: int, b: int) -> Edge | None:
        """The edge joining balls a and b in either order, if present."""
        lo, hi = (a, b) if a < b else (b, a)
        for e in self.edges:
            if e.source == lo and e.target == hi:
                return e
        return None


def build_graph(cover: Cover, min_strength: int = 1) -> MapperGraph:
    """Colorless graph over a cover: one vertex per ball, edges on overlap.

    Edges are stored once with source < target, sorted lexicographically.
    ``min_strength`` above 1 drops edges whose intersection is smaller,
    which prunes structure carried by only a few shared points.
    """
    vertices = tuple(Vertex(id=b.id, size=len(b.members)) for b in cover.balls)
    member_sets = [frozenset(b.members) for b in cover.balls]
    edges = []
    for i in range(len(member_sets)):
        for j in range(i + 1, len(member_sets)):
            strength = len(member_sets[i] & member_sets[j])
            if strength >= max(1, min_strength):
                edges.append(
                    Edge(source=cover.balls[i].id, target=cover.balls[j].id,
                         strength=strength)
                )
    return MapperGraph(
        vertices=vertices,
        edges=tuple(edges),
        landmarks=tuple(b.landmark for b in cover.balls),
    )


def aggregate(kind: str, values: Sequence[float]) -> float:
    """One summary value for a group. ``sd`` of a single value is 0.

    mean and sd accumulate with ``math.fsum`` so the result does not depend
    on the order the group was assembled in.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise ValueError("cannot aggregate an empty group")
    if kind == "mean":
        return math.fsum(vals) / len(vals)
    if kind == "sd":
        if len(vals) == 1:
            return 0.0
        m = math.fsum(vals) / len(vals)
        return math.sqrt(math.fsum((v - m) ** 2 for v in vals) / (len(vals) - 1))
    if kind == "min":
        return min(vals)
    if kind == "max":
        return max(vals)
    if kind == "median":
        return float(statistics.median(vals))
    if kind == "count":
        return float(len(vals))
    raise ValueError(f"unknown aggregation {kind!r}; expected one of {AGGREGATIONS}")


def color_graph(g: MapperGraph, cover: Cover, values, agg: str = "mean") -> MapperGraph:
    """Color each vertex with ``agg`` over ``values`` restricted to its ball.

    ``values`` is anything row-aligned with the point cloud: an outcome
    vector, an axis column, a numpy array or a plain sequence.
    """
    vals = np.asarray(getattr(values, "values", values), dtype=np.float64).reshape(-1)
    if vals.shape[0] != cover.n_points:
        raise ValueError(
            f"got {vals.shape[0]} values for a cloud of {cover.n_points} points"
        )
    colors = [
        aggregate(agg, vals[np.asarray(b.members, dtype=np.int64) - 1])
        for b in cover.balls
    ]
    return set_coloring(g, colors)


def set_coloring(g: MapperGraph, colors: Sequence[float]) -> MapperGraph:
    """Replace vertex colors with an externally computed per-ball vector."""
    vals = [float(c) for c in colors]
    if len(vals) != len(g.vertices):
        raise ValueError(f"need {len(g.vertices)} colors, got {len(vals)}")
    if not all(math.isfinite(c) for c in vals):
        raise ValueError("colors must all be finite")
    vertices = tuple(replace(v, color=c) for v, c in zip(g.vertices, vals))
    return MapperGraph(vertices=vertices, edges=g.edges, landmarks=g.landmarks)


def points_to_balls(cover: Cover) -> list[tuple[int, int]]:
    """Long membership table: one (pt, ball) row per pair, ball-major order.

    Points in several balls appear once per ball, so the table joins back
    onto the input rows by ``pt``.
    """
    return [(pt, ball.id) for ball in cover.balls for pt in ball.members]


@dataclass(frozen=True)
class GraphSummary:
    balls: int
    edges: int
    min_size: int
    max_size: int
    mean_size: float
    color_range: tuple[float, float] | None

    def lines(self) -> list[str]:
        out = [
            f"balls: {self.balls}",
            f"edges: {self.edges}",
            f"cardinality: min={self.min_size} max={self.max_size} "
            f"mean={self.mean_size:.6g}",
        ]
        if self.color_range is None:
            out.append("color: none")
        else:
            out.append(f"color: min={self.color_range[0]:.6g} max={self.color_range[1]:.6g}")
        return out


def graph_summary(g: MapperGraph) -> GraphSummary:
    sizes = [v.size for v in g.vertices]
    coloring = g.coloring
    color_range = (min(coloring), max(coloring)) if coloring is not None else None
    return GraphSummary(
        balls=len(sizes),
        edges=len(g.edges),
        min_size=min(sizes),
        max_size=max(sizes),
        mean_size=math.fsum(sizes) / len(sizes),
        color_range=color_range,
    )
