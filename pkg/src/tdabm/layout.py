"""Reproducible 2-D embeddings and cardinality-to-size scaling.

The embedding is a force-directed (spring) iteration seeded explicitly, so
the same graph and seed always give the same picture. Layout is purely
presentational: it never feeds back into the graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import MapperGraph

DEFAULT_LAYOUT_SEED = 42
DEFAULT_ITERATIONS = 500


@dataclass(frozen=True)
class SizeScale:
    """Display-size interval for vertices, in the image's units."""

    min_size: float = 7.0
    max_size: float = 20.0

    def __post_init__(self):
        if not (0 < self.min_size <= self.max_size):
            raise ValueError("need 0 < min_size <= max_size")


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[int, tuple[float, float]]
    seed: int


def spring_layout(
    g: MapperGraph,
    seed: int = DEFAULT_LAYOUT_SEED,
    iterations: int = DEFAULT_ITERATIONS,
) -> LayoutResult:
    """Force-directed positions for every vertex, normalized to a unit box.

    Classic repulsion/attraction scheme with linear cooling: every pair
    repels with k^2/d, every edge attracts with d^2/k, displacement per
    sweep is capped by a shrinking temperature. Deterministic given
    (graph, seed, iterations); edge strengths are not used.
    """
    if not g.vertices:
        raise ValueError("cannot lay out an empty graph")
    if iterations < 1:
        raise ValueError("iterations must be positive")
    ids = [v.id for v in g.vertices]
    if len(ids) == 1:
        return LayoutResult(positions={ids[0]: (0.0, 0.0)}, seed=seed)

    row = {vid: i for i, vid in enumerate(ids)}
    n = len(ids)
    pos = np.random.default_rng(seed).random((n, 2))
    e_src = np.asarray([row[e.source] for e in g.edges], dtype=np.int64)
    e_dst = np.asarray([row[e.target] for e in g.edges], dtype=np.int64)
    k = math.sqrt(1.0 / n)
    t0 = 0.1

    for it in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        d2 = (delta * delta).sum(axis=2)
        np.fill_diagonal(d2, np.inf)
        d2 = np.maximum(d2, 1e-18)  # coincident vertices: avoid blowup
        disp = ((k * k / d2)[:, :, None] * delta).sum(axis=1)
        if e_src.size:
            dvec = pos[e_src] - pos[e_dst]
            d = np.sqrt((dvec * dvec).sum(axis=1))
            pull = dvec * (d / k)[:, None]
            np.add.at(disp, e_src, -pull)
            np.add.at(disp, e_dst, pull)
        length = np.sqrt((disp * disp).sum(axis=1))
        temp = t0 * (1.0 - it / iterations)
        step = np.where(length > 0, np.minimum(length, temp) / np.maximum(length, 1e-30), 0.0)
        pos = pos + disp * step[:, None]

    lo = pos.min(axis=0)
    span = pos.max(axis=0) - lo
    safe = np.where(span > 0, span, 1.0)
    unit = np.where(span > 0, (pos - lo) / safe, 0.0)
    positions = {vid: (float(unit[i, 0]), float(unit[i, 1])) for vid, i in row.items()}
    return LayoutResult(positions=positions, seed=seed)


def size_scale(cardinalities: Sequence[int], s: SizeScale = SizeScale()) -> list[float]:
    """Affine map from point counts to display sizes.

    The smallest count maps to ``s.min_size``, the largest to
    ``s.max_size``; when all counts are equal every vertex gets the
    midpoint of the range.
    """
    counts = [int(c) for c in cardinalities]
    if not counts:
        raise ValueError("need at least one cardinality")
    if min(counts) < 1:
        raise ValueError("cardinalities must be >= 1")
    lo, hi = min(counts), max(counts)
    if lo == hi:
        return [(s.min_size + s.max_size) / 2.0] * len(counts)
    width = s.max_size - s.min_size
    return [s.min_size + ((c - lo) / (hi - lo)) * width for c in counts]
