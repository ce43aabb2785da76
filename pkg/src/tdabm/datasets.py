"""Synthetic datasets for demos and quick experiments."""

from __future__ import annotations

import numpy as np
import pandas as pd

FORMULAS = ("sum",)


def make_uniform_table(n: int, k: int = 2, seed: int = 0, formula: str = "sum") -> pd.DataFrame:
    """n rows of k independent U[0,1) axis columns X1..Xk plus an outcome Y.

    ``formula="sum"`` sets Y to the row sum of the axes. All randomness
    comes from ``seed``; no OS entropy is used.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if formula not in FORMULAS:
        raise ValueError(f"formula must be one of {FORMULAS}, got {formula!r}")
    x = np.random.default_rng(seed).random((n, k))
    cols = {f"X{i + 1}": x[:, i] for i in range(k)}
    cols["Y"] = x.sum(axis=1)
    return pd.DataFrame(cols)


def table_to_csv(frame: pd.DataFrame) -> str:
    """Deterministic CSV text; floats written with repr so they round-trip."""
    lines = [",".join(str(c) for c in frame.columns)]
    for row in frame.itertuples(index=False):
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"
