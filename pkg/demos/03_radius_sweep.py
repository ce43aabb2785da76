"""Sweep the ball radius to move between local and global structure.

Small radii produce many small balls (fine detail); large radii merge
everything into a few balls (the overall shape). There is no formula for
the right radius, so look at several.
"""

from pathlib import Path

import tdabm

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

table = tdabm.make_uniform_table(n=500, k=2, seed=20240801)
pc = tdabm.PointCloud(table[["X1", "X2"]].to_numpy(), ("X1", "X2"))
y = tdabm.OutcomeVector(table["Y"].to_numpy(), "Y")

print("epsilon  balls  edges  largest ball")
for eps in [0.1, 0.2, 0.3, 0.4, 0.6, 0.8, 1.5]:
    cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=eps))
    graph = tdabm.color_graph(tdabm.build_graph(cover), cover, y)
    biggest = max(v.size for v in graph.vertices)
    print(f"{eps:7.2f}  {len(graph.vertices):5d}  {len(graph.edges):5d}  {biggest:12d}")
    layout = tdabm.spring_layout(graph, seed=42)
    (OUT / f"sweep_eps_{eps}.svg").write_bytes(tdabm.render_svg(graph, layout))

print(f"\nwrote per-radius plots into {OUT}")
print("note: ball counts need not decrease monotonically in epsilon:")
print("greedy landmark choices can tip either way between nearby radii")
