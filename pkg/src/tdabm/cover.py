"""Greedy ball covers of a point cloud.

A cover is built by repeatedly picking a landmark from the not-yet-covered
points and forming the ball of every point within ``epsilon`` of it
(boundary inclusive), until no uncovered point remains. Because each
landmark is uncovered when chosen, any two landmarks end up more than
``epsilon`` apart.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .ingest import PointCloud

STRATEGIES = ("lowest-index", "random")
METRICS = ("euclidean",)

# Auto index heuristic: a grid pays off for large, low-dimensional clouds.
GRID_MAX_DIMS = 3
GRID_MIN_POINTS = 512


@dataclass(frozen=True)
class CoverConfig:
    """Cover parameters. ``seed`` only matters for ``strategy="random"``."""

    epsilon: float
    strategy: str = "lowest-index"
    seed: int = 0
    metric: str = "euclidean"

    def __post_init__(self):
        if not (np.isfinite(self.epsilon) and self.epsilon > 0):
            raise ValueError("epsilon must be a positive finite real")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        if self.metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}, got {self.metric!r}")


@dataclass(frozen=True)
class Ball:
    """One cover element: id is creation order, indices are 1-based rows."""

    id: int
    landmark: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.id < 1:
            raise ValueError("ball ids start at 1")
        if not self.members:
            raise ValueError("a ball cannot be empty")
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("ball members must be strictly increasing row indices")
        if self.landmark not in self.members:
            raise ValueError("the landmark must be a member of its own ball")


@dataclass(frozen=True)
class Cover:
    balls: tuple[Ball, ...]
    config: CoverConfig
    n_points: int

    def __post_init__(self):
        if [b.id for b in self.balls] != list(range(1, len(self.balls) + 1)):
            raise ValueError("ball ids must be 1..B in creation order")
        seen = np.zeros(self.n_points, dtype=bool)
        for ball in self.balls:
            idx = np.asarray(ball.members, dtype=np.int64)
            if idx[0] < 1 or idx[-1] > self.n_points:
                raise ValueError("ball members out of row-index range")
            seen[idx - 1] = True
        if not seen.all():
            raise ValueError("cover is incomplete: some rows belong to no ball")

    @property
    def n_balls(self) -> int:
        return len(self.balls)


def _within(points: np.ndarray, center: np.ndarray, epsilon: float) -> np.ndarray:
    """Inclusive radius test, squared on both sides (no square roots)."""
    delta = points - center
    return (delta * delta).sum(axis=1) <= epsilon * epsilon


class GridIndex:
    """Uniform grid with cell width ``epsilon`` for exact radius queries.

    Purely an accelerator: candidates gathered from nearby cells go through
    the same inclusive distance test as the brute-force scan, so the member
    set is identical by construction. Cell ranges are widened by one cell
    per side so boundary rounding can never drop a candidate.
    """

    # beyond this many cells along an axis, int64 cell coordinates could
    # overflow; callers should fall back to the brute-force scan
    MAX_CELL_COORD = 2 ** 62

    def __init__(self, points: np.ndarray, epsilon: float):
        if not epsilon > 0:
            raise ValueError("epsilon must be positive")
        self.points = np.asarray(points, dtype=np.float64)
        self.epsilon = float(epsilon)
        with np.errstate(over="ignore"):  # inf is caught by the bound below
            raw = np.floor(self.points / self.epsilon)
        if np.abs(raw).max() >= self.MAX_CELL_COORD:
            raise ValueError(
                "radius is too small relative to the coordinate span for a "
                "grid index; use the brute-force scan"
            )
        cells = raw.astype(np.int64)
        buckets: dict[tuple[int, ...], list[int]] = {}
        for i, key in enumerate(map(tuple, cells)):
            buckets.setdefault(key, []).append(i)
        self._buckets = {k: np.asarray(v, dtype=np.int64) for k, v in buckets.items()}

    def query(self, center: np.ndarray) -> np.ndarray:
        """Sorted 0-based positions of all points within epsilon of center."""
        eps = self.epsilon
        lo = np.floor((center - eps) / eps).astype(np.int64) - 1
        hi = np.floor((center + eps) / eps).astype(np.int64) + 1
        hits = []
        for key in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            bucket = self._buckets.get(key)
            if bucket is not None:
                hits.append(bucket)
        if not hits:
            return np.empty(0, dtype=np.int64)
        candidates = np.sort(np.concatenate(hits))
        return candidates[_within(self.points[candidates], center, eps)]


def ball_membership(
    pc: PointCloud,
    landmark: int,
    epsilon: float,
    *,
    index: GridIndex | None = None,
) -> list[int]:
    """All 1-based rows within ``epsilon`` of the landmark row, inclusive.

    Always contains the landmark itself. ``index`` may supply a prebuilt
    :class:`GridIndex` over the same cloud and radius.
    """
    if not 1 <= landmark <= pc.n_points:
        raise IndexError(f"landmark {landmark} out of range 1..{pc.n_points}")
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    center = pc.values[landmark - 1]
    if index is not None:
        if index.epsilon != epsilon or index.points.shape != pc.values.shape:
            raise ValueError("grid index was built for a different cloud or radius")
        rows = index.query(center)
    else:
        rows = np.flatnonzero(_within(pc.values, center, epsilon))
    return [int(r) + 1 for r in rows]


def build_cover(pc: PointCloud, cfg: CoverConfig, *, index: str = "auto") -> Cover:
    """Cover the cloud with epsilon-balls around greedily chosen landmarks.

    ``strategy="lowest-index"`` always takes the first uncovered row and is
    fully deterministic given row order; ``strategy="random"`` draws the
    landmark uniformly from the uncovered set using ``cfg.seed``. Balls
    contain every point within the radius, covered or not, so overlaps are
    recorded. ``index`` is one of ``auto``, ``brute``, ``grid``; the grid
    path returns the same member sets as the brute-force scan.
    """
    if index not in ("auto", "brute", "grid"):
        raise ValueError(f"index must be auto, brute or grid, got {index!r}")
    points = pc.values
    n = pc.n_points
    eps = cfg.epsilon
    grid = None
    if index == "grid":
        grid = GridIndex(points, eps)
    elif index == "auto" and pc.n_dims <= GRID_MAX_DIMS and n >= GRID_MIN_POINTS:
        try:
            grid = GridIndex(points, eps)
        except ValueError:
            grid = None  # degenerate radius/span ratio: stay on brute force
    rng = np.random.default_rng(cfg.seed) if cfg.strategy == "random" else None

    uncovered = np.ones(n, dtype=bool)
    balls: list[Ball] = []
    while uncovered.any():
        pool = np.flatnonzero(uncovered)
        lm = int(pool[0]) if rng is None else int(pool[rng.integers(pool.size)])
        center = points[lm]
        if grid is not None:
            rows = grid.query(center)
        else:
            rows = np.flatnonzero(_within(points, center, eps))
        uncovered[rows] = False
        balls.append(
            Ball(
                id=len(balls) + 1,
                landmark=lm + 1,
                members=tuple(int(r) + 1 for r in rows),
            )
        )
    return Cover(balls=tuple(balls), config=cfg, n_points=n)


def coverage_map(cover: Cover) -> list[list[int]]:
    """For each row (entry i is row i+1), the ascending ids of its balls."""
    covering: list[list[int]] = [[] for _ in range(cover.n_points)]
    for ball in cover.balls:
        for member in ball.members:
            covering[member - 1].append(ball.id)
    return covering
