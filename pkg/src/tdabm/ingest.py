"""Tabular ingestion: CSV in, point cloud and outcome vector out.

Row order is significant throughout the package: rows are indexed 1..N
in file order, and landmark selection downstream depends on that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd

from .errors import IngestError

NA_POLICIES = ("error", "drop-row")
NORMALIZATIONS = ("none", "min-max", "z-score")


@dataclass(frozen=True, eq=False)
class PointCloud:
    """N points in K dimensions; row i of ``values`` is row index i+1.

    ``values`` is a read-only float64 matrix with every entry finite.
    """

    values: np.ndarray
    column_names: tuple[str, ...]

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("point cloud must be an N x K matrix with N, K >= 1")
        if not np.isfinite(arr).all():
            raise ValueError("point cloud entries must all be finite")
        names = tuple(str(c) for c in self.column_names)
        if len(names) != arr.shape[1]:
            raise ValueError("need exactly one column name per dimension")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "column_names", names)

    @property
    def n_points(self) -> int:
        return self.values.shape[0]

    @property
    def n_dims(self) -> int:
        return self.values.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointCloud):
            return NotImplemented
        return self.column_names == other.column_names and np.array_equal(
            self.values, other.values
        )


@dataclass(frozen=True, eq=False)
class OutcomeVector:
    """One finite real outcome per point cloud row, aligned by row index."""

    values: np.ndarray
    name: str

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64, copy=True).reshape(-1)
        if arr.size < 1:
            raise ValueError("outcome vector must have at least one entry")
        if not np.isfinite(arr).all():
            raise ValueError("outcome entries must all be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, OutcomeVector):
            return NotImplemented
        return self.name == other.name and np.array_equal(self.values, other.values)


def read_frame(path, delimiter: str = ",") -> pd.DataFrame:
    """Read a headered CSV as raw strings, preserving row order."""
    p = Path(path)
    if not p.is_file():
        raise IngestError(f"input file not found: {p}")
    try:
        return pd.read_csv(p, sep=delimiter, dtype=str, encoding="utf-8",
                           keep_default_na=False)
    except (OSError, UnicodeDecodeError, pd.errors.ParserError,
            pd.errors.EmptyDataError) as exc:
        raise IngestError(f"cannot read {p}: {exc}") from exc


def _parse_floats(cells) -> np.ndarray:
    """Correctly rounded float parsing; unparseable cells become NaN.

    Python's float() round-trips repr output exactly, which pandas'
    numeric coercion does not guarantee.
    """
    out = np.empty(len(cells), dtype=np.float64)
    for i, cell in enumerate(cells):
        try:
            out[i] = float(cell)
        except (TypeError, ValueError):
            out[i] = np.nan
    return out


def column_values(frame: pd.DataFrame, name: str) -> np.ndarray:
    """Numeric values of one column; every cell must parse to a finite real."""
    if name not in frame.columns:
        raise IngestError(f"unknown column {name!r}")
    vals = _parse_floats(frame[name].to_numpy())
    bad = np.flatnonzero(~np.isfinite(vals))
    if bad.size:
        raise IngestError(
            f"column {name!r} has a non-numeric or missing value at data row {bad[0] + 1}"
        )
    return vals


def load_table_with_frame(
    path,
    axis_columns: Sequence[str],
    outcome_column: str,
    na_policy: str = "error",
    delimiter: str = ",",
) -> tuple[PointCloud, OutcomeVector, pd.DataFrame]:
    """Like :func:`load_table`, but also returns the retained raw rows.

    The returned frame keeps all original columns (as strings) for the
    rows that survived ``na_policy``, re-indexed 0..N-1 so that frame row
    i corresponds to point-cloud row index i+1.
    """
    axes = [str(c) for c in axis_columns]
    if not axes:
        raise IngestError("need at least one axis column")
    if len(set(axes)) != len(axes):
        raise IngestError("axis columns must be distinct")
    if outcome_column in axes:
        raise IngestError("axis and outcome columns must be disjoint")
    if na_policy not in NA_POLICIES:
        raise IngestError(f"na_policy must be one of {NA_POLICIES}, got {na_policy!r}")

    frame = read_frame(path, delimiter)
    wanted = axes + [outcome_column]
    missing = [c for c in wanted if c not in frame.columns]
    if missing:
        raise IngestError(f"column(s) not present in {path}: {', '.join(missing)}")

    selected = np.column_stack([_parse_floats(frame[c].to_numpy()) for c in wanted])
    bad = ~np.isfinite(selected)
    if bad.any():
        if na_policy == "error":
            r, c = np.argwhere(bad)[0]
            raise IngestError(
                f"non-numeric or missing value at data row {r + 1}, "
                f"column {wanted[c]!r} (na_policy=error)"
            )
        keep = ~bad.any(axis=1)
        if not keep.any():
            raise IngestError("no rows left after dropping rows with missing values")
        frame = frame.loc[keep].reset_index(drop=True)
        selected = selected[keep]

    pc = PointCloud(values=selected[:, : len(axes)], column_names=tuple(axes))
    outcome = OutcomeVector(values=selected[:, -1], name=outcome_column)
    return pc, outcome, frame


def load_table(
    path,
    axis_columns: Sequence[str],
    outcome_column: str,
    na_policy: str = "error",
    delimiter: str = ",",
) -> tuple[PointCloud, OutcomeVector]:
    """Load axis and outcome columns from a headered CSV file.

    Rows correspond 1:1 and in order with the retained file rows; under
    ``na_policy="drop-row"`` any row with a missing or non-numeric cell in
    a selected column is dropped and the remaining rows are re-sequenced.
    """
    pc, outcome, _ = load_table_with_frame(
        path, axis_columns, outcome_column, na_policy=na_policy, delimiter=delimiter
    )
    return pc, outcome


def normalize(pc: PointCloud, method: str = "none") -> PointCloud:
    """Rescale each column: ``min-max`` onto [0,1] or ``z-score`` to mean 0, sd 1.

    Uses the sample (N-1) standard deviation. Constant columns map to all
    zeros under both methods; ``none`` returns the input unchanged.
    """
    if method not in NORMALIZATIONS:
        raise ValueError(f"method must be one of {NORMALIZATIONS}, got {method!r}")
    if method == "none":
        return pc
    x = np.array(pc.values, copy=True)
    for j in range(x.shape[1]):
        col = x[:, j]
        if method == "min-max":
            lo, hi = col.min(), col.max()
            x[:, j] = 0.0 if hi == lo else (col - lo) / (hi - lo)
        else:
            sd = col.std(ddof=1) if col.size > 1 else 0.0
            x[:, j] = 0.0 if (not np.isfinite(sd) or sd == 0.0) else (col - col.mean()) / sd
    return PointCloud(values=x, column_names=pc.column_names)
