"""Serialization: canonical JSON (lossless round-trip), DOT, GraphML, CSV.

JSON is the interchange format and carries the whole cover/graph pair;
DOT and GraphML are one-way exports for graph tooling. All indices are
serialized 1-based, all text is UTF-8 with newline line endings.
"""

from __future__ import annotations

import json

from .cover import Ball, Cover, CoverConfig, coverage_map
from .graph import Edge, MapperGraph, Vertex


def _check_consistent(cover: Cover, g: MapperGraph) -> None:
    if tuple(b.id for b in cover.balls) != tuple(v.id for v in g.vertices):
        raise ValueError("cover and graph disagree on ball ids")
    if any(len(b.members) != v.size for b, v in zip(cover.balls, g.vertices)):
        raise ValueError("cover and graph disagree on ball sizes")
    if tuple(b.landmark for b in cover.balls) != g.landmarks:
        raise ValueError("cover and graph disagree on landmarks")


def to_json(cover: Cover, g: MapperGraph) -> str:
    """One sorted-key JSON document holding the full cover/graph pair."""
    _check_consistent(cover, g)
    doc = {
        "config": {
            "epsilon": cover.config.epsilon,
            "metric": cover.config.metric,
            "seed": cover.config.seed,
            "strategy": cover.config.strategy,
        },
        "n_points": cover.n_points,
        "vertices": [{"id": v.id, "size": v.size} for v in g.vertices],
        "edges": [[e.source, e.target] for e in g.edges],
        "edges_strength": [e.strength for e in g.edges],
        "points_covered_by_landmarks": [list(b.members) for b in cover.balls],
        "landmarks": list(g.landmarks),
        "coloring": g.coloring,
        "coverage": coverage_map(cover),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> tuple[Cover, MapperGraph]:
    """Inverse of :func:`to_json`; structural identity on round-trip."""
    doc = json.loads(text)
    cfg = CoverConfig(
        epsilon=doc["config"]["epsilon"],
        strategy=doc["config"]["strategy"],
        seed=doc["config"]["seed"],
        metric=doc["config"]["metric"],
    )
    landmarks = [int(x) for x in doc["landmarks"]]
    member_lists = [tuple(int(p) for p in ms) for ms in doc["points_covered_by_landmarks"]]
    if len(landmarks) != len(member_lists) or len(landmarks) != len(doc["vertices"]):
        raise ValueError("landmarks, member lists and vertices differ in length")
    balls = tuple(
        Ball(id=i + 1, landmark=lm, members=ms)
        for i, (lm, ms) in enumerate(zip(landmarks, member_lists))
    )
    cover = Cover(balls=balls, config=cfg, n_points=int(doc["n_points"]))

    coloring = doc.get("coloring")
    if coloring is not None and len(coloring) != len(doc["vertices"]):
        raise ValueError("coloring length does not match vertex count")
    vertices = tuple(
        Vertex(
            id=int(v["id"]),
            size=int(v["size"]),
            color=None if coloring is None else float(coloring[i]),
        )
        for i, v in enumerate(doc["vertices"])
    )
    if len(doc["edges"]) != len(doc["edges_strength"]):
        raise ValueError("edges and edges_strength differ in length")
    edges = tuple(
        Edge(source=int(a), target=int(b), strength=int(s))
        for (a, b), s in zip(doc["edges"], doc["edges_strength"])
    )
    g = MapperGraph(vertices=vertices, edges=edges, landmarks=tuple(landmarks))
    _check_consistent(cover, g)
    return cover, g


def to_dot(g: MapperGraph) -> str:
    """Undirected DOT text; nodes carry size (and color once colored)."""
    lines = ["graph ballmapper {", "  node [shape=circle];"]
    for v in g.vertices:
        attrs = f"size={v.size}"
        if v.color is not None:
            attrs += f", color_value={v.color!r}"
        lines.append(f"  {v.id} [{attrs}];")
    for e in g.edges:
        lines.append(f"  {e.source} -- {e.target} [strength={e.strength}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(g: MapperGraph) -> str:
    """GraphML text readable by standard graph tooling."""
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="size" for="node" attr.name="size" attr.type="int"/>',
        '  <key id="color" for="node" attr.name="color" attr.type="double"/>',
        '  <key id="strength" for="edge" attr.name="strength" attr.type="int"/>',
        '  <graph id="ballmapper" edgedefault="undirected">',
    ]
    for v in g.vertices:
        data = f'<data key="size">{v.size}</data>'
        if v.color is not None:
            data += f'<data key="color">{v.color!r}</data>'
        out.append(f'    <node id="{v.id}">{data}</node>')
    for e in g.edges:
        out.append(
            f'    <edge source="{e.source}" target="{e.target}">'
            f'<data key="strength">{e.strength}</data></edge>'
        )
    out += ["  </graph>", "</graphml>"]
    return "\n".join(out) + "\n"


def to_csv_points_to_balls(table: list[tuple[int, int]]) -> str:
    """The long (pt, ball) membership table as CSV with a ``pt,ball`` header."""
    lines = ["pt,ball"]
    lines += [f"{pt},{ball}" for pt, ball in table]
    return "\n".join(lines) + "\n"
