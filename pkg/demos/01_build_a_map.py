"""Build a ball-cover map of a 2-D point cloud and plot it.

Generates 500 uniform points on the unit square with outcome Y = X1 + X2,
covers them with radius-0.4 balls, and renders the intersection graph
colored by the mean outcome per ball.
"""

from pathlib import Path

import tdabm

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# synthetic dataset: axes X1, X2 ~ U[0,1), outcome Y = X1 + X2
table = tdabm.make_uniform_table(n=500, k=2, seed=20240801)
csv_path = OUT / "uniform500.csv"
csv_path.write_text(tdabm.table_to_csv(table), encoding="utf-8")

pc, y = tdabm.load_table(csv_path, ["X1", "X2"], "Y")
print(f"loaded {pc.n_points} points in {pc.n_dims} dimensions, outcome {y.name!r}")

cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=0.4))
graph = tdabm.color_graph(tdabm.build_graph(cover), cover, y)

print()
for line in tdabm.graph_summary(graph).lines():
    print(line)

print()
print("ball  landmark  points  mean(Y)")
for ball, vertex in zip(cover.balls, graph.vertices):
    x1, x2 = pc.values[ball.landmark - 1]
    print(f"{ball.id:4d}  ({x1:.2f},{x2:.2f})  {vertex.size:5d}  {vertex.color:7.3f}")

# balls that share points are joined by edges; strength = overlap size
print()
for e in graph.edges:
    print(f"ball {e.source} -- ball {e.target}  (shares {e.strength} points)")

layout = tdabm.spring_layout(graph, seed=42)
svg = tdabm.render_svg(graph, layout)
(OUT / "map.svg").write_bytes(svg)
print(f"\nwrote {OUT / 'map.svg'}")
