"""Recoloring an existing map without rebuilding the cover.

The vertex coloring is just a per-ball aggregate, so any row-aligned
column works: the outcome, an axis, or something computed downstream.
Also shows the long-table workflow: dump (pt, ball) memberships, merge
onto the raw data with pandas, group by ball, and assign the result.
"""

from pathlib import Path

import pandas as pd

import tdabm

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

table = tdabm.make_uniform_table(n=500, k=2, seed=20240801)
pc = tdabm.PointCloud(table[["X1", "X2"]].to_numpy(), ("X1", "X2"))
y = tdabm.OutcomeVector(table["Y"].to_numpy(), "Y")

cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=0.4))
base = tdabm.build_graph(cover)
layout = tdabm.spring_layout(base, seed=42)

# one coloring per question: level of Y, spread of Y, and where X1 is large
for agg, label in [("mean", "level"), ("sd", "spread")]:
    colored = tdabm.color_graph(base, cover, y, agg=agg)
    path = OUT / f"y_{label}.svg"
    path.write_bytes(tdabm.render_svg(colored, layout))
    print(f"{label:6s} coloring: "
          + "  ".join(f"b{v.id}={v.color:.3f}" for v in colored.vertices))

by_axis = tdabm.color_graph(base, cover, pc.values[:, 0])
(OUT / "x1_mean.svg").write_bytes(tdabm.render_svg(by_axis, layout))

# the same spread coloring via the long membership table + pandas
memberships = pd.DataFrame(tdabm.points_to_balls(cover), columns=["pt", "ball"])
table = table.assign(pt=range(1, len(table) + 1))
merged = memberships.merge(table, on="pt")
per_ball = merged.groupby("ball")["Y"].apply(lambda v: tdabm.aggregate("sd", v))
recolored = tdabm.set_coloring(base, per_ball.sort_index().tolist())

direct = tdabm.color_graph(base, cover, y, agg="sd")
assert recolored == direct
print("\ngroup-by recoloring matches color_graph(..., sd) exactly")
print(f"wrote {OUT / 'y_level.svg'}, {OUT / 'y_spread.svg'}, {OUT / 'x1_mean.svg'}")
