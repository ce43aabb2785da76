"""Machine-readable exports and the JSON round-trip.

JSON is the canonical interchange format and reconstructs the exact
cover/graph pair; DOT and GraphML are one-way exports for graph tools;
the points-to-balls CSV joins graph structure back onto the raw rows.
"""

from pathlib import Path

import tdabm

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

table = tdabm.make_uniform_table(n=500, k=2, seed=20240801)
pc = tdabm.PointCloud(table[["X1", "X2"]].to_numpy(), ("X1", "X2"))
y = tdabm.OutcomeVector(table["Y"].to_numpy(), "Y")
cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=0.4))
graph = tdabm.color_graph(tdabm.build_graph(cover), cover, y)

doc = tdabm.to_json(cover, graph)
(OUT / "map.json").write_text(doc, encoding="utf-8")
cover2, graph2 = tdabm.from_json(doc)
print("JSON round-trip reconstructs the originals:", (cover2, graph2) == (cover, graph))

(OUT / "map.dot").write_text(tdabm.to_dot(graph), encoding="utf-8")
(OUT / "map.graphml").write_text(tdabm.to_graphml(graph), encoding="utf-8")

p2b = tdabm.points_to_balls(cover)
(OUT / "points_to_balls.csv").write_text(
    tdabm.to_csv_points_to_balls(p2b), encoding="utf-8")
print(f"membership rows: {len(p2b)} "
      f"(= total ball cardinality {sum(v.size for v in graph.vertices)})")

overlaps = len(p2b) - pc.n_points
print(f"points sitting in more than one ball account for {overlaps} extra rows")
print(f"wrote map.json / map.dot / map.graphml / points_to_balls.csv into {OUT}")
