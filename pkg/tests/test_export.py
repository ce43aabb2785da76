import json

import networkx as nx
import numpy as np
import pytest

import tdabm
from instances import cloud_of, random_instance

TABLE_KEYS = {"vertices", "edges", "edges_strength", "points_covered_by_landmarks",
              "landmarks", "coloring", "coverage"}


def small_pair(values=(0.0, 0.1, 0.2), epsilon=1.0, colors=None):
    pc = cloud_of(np.array(values).reshape(-1, 1), names=["A"])
    cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=epsilon))
    g = tdabm.build_graph(cover)
    if colors is not None:
        g = tdabm.set_coloring(g, colors)
    return cover, g


class TestJson:
    def test_single_ball_document(self):
        cover, g = small_pair()
        doc = json.loads(tdabm.to_json(cover, g))
        assert TABLE_KEYS <= set(doc)
        assert doc["vertices"] == [{"id": 1, "size": 3}]
        assert doc["edges"] == [] and doc["edges_strength"] == []
        assert doc["coverage"] == [[1], [1], [1]]
        assert doc["coloring"] is None

    def test_keys_are_sorted_and_newline_terminated(self, demo_cover, demo_graph):
        text = tdabm.to_json(demo_cover, demo_graph)
        assert text.endswith("\n")
        doc = json.loads(text)
        assert list(doc) == sorted(doc)

    def test_demo_dataset_has_seven_landmarks(self, demo_cover, demo_graph):
        doc = json.loads(tdabm.to_json(demo_cover, demo_graph))
        assert len(doc["landmarks"]) == 7

    def test_roundtrip_identity(self, demo_cover, demo_graph):
        text = tdabm.to_json(demo_cover, demo_graph)
        cover2, graph2 = tdabm.from_json(text)
        assert cover2 == demo_cover
        assert graph2 == demo_graph
        assert tdabm.to_json(cover2, graph2) == text

    @pytest.mark.parametrize("seed", range(12))
    def test_roundtrip_random_instances(self, seed):
        points, eps = random_instance(seed, max_n=60, max_k=4)
        pc = cloud_of(points)
        cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=eps))
        g = tdabm.build_graph(cover)
        if seed % 2:
            g = tdabm.color_graph(g, cover, points[:, 0])
        cover2, g2 = tdabm.from_json(tdabm.to_json(cover, g))
        assert (cover2, g2) == (cover, g)

    def test_inconsistent_pair_rejected(self, demo_cover, demo_graph):
        other_cover, _ = small_pair()
        with pytest.raises(ValueError, match="disagree"):
            tdabm.to_json(other_cover, demo_graph)

    def test_covered_lengths_match_p2b_rows(self, demo_cover, demo_graph):
        doc = json.loads(tdabm.to_json(demo_cover, demo_graph))
        total = sum(len(ms) for ms in doc["points_covered_by_landmarks"])
        csv_text = tdabm.to_csv_points_to_balls(tdabm.points_to_balls(demo_cover))
        assert total == len(csv_text.strip().splitlines()) - 1


class TestDot:
    def test_single_vertex(self):
        _, g = small_pair()
        dot = tdabm.to_dot(g)
        assert "  1 [size=3];" in dot
        assert "--" not in dot

    def test_edge_carries_strength(self, demo_graph):
        dot = tdabm.to_dot(demo_graph)
        e = demo_graph.edges[0]
        assert f"  {e.source} -- {e.target} [strength={e.strength}];" in dot

    def test_color_attribute_appears_once_colored(self):
        _, g = small_pair(colors=[2.5])
        assert "color_value=2.5" in tdabm.to_dot(g)

    def test_deterministic(self, demo_graph):
        assert tdabm.to_dot(demo_graph) == tdabm.to_dot(demo_graph)


class TestGraphml:
    def test_reimport_preserves_counts_and_attrs(self, demo_graph):
        parsed = nx.parse_graphml(tdabm.to_graphml(demo_graph))
        assert parsed.number_of_nodes() == len(demo_graph.vertices)
        assert parsed.number_of_edges() == len(demo_graph.edges)
        for v in demo_graph.vertices:
            node = parsed.nodes[str(v.id)]
            assert node["size"] == v.size
            assert node["color"] == pytest.approx(v.color, abs=0)
        for e in demo_graph.edges:
            assert parsed.edges[str(e.source), str(e.target)]["strength"] == e.strength

    def test_colorless_graph_parses(self, demo_cover):
        parsed = nx.parse_graphml(tdabm.to_graphml(tdabm.build_graph(demo_cover)))
        assert parsed.number_of_nodes() == 7


class TestPointsToBallsCsv:
    def test_header_and_rows(self):
        cover, _ = small_pair()
        text = tdabm.to_csv_points_to_balls(tdabm.points_to_balls(cover))
        assert text == "pt,ball\n1,1\n2,1\n3,1\n"

    def test_joinable_back_to_member_sets(self, demo_cover):
        text = tdabm.to_csv_points_to_balls(tdabm.points_to_balls(demo_cover))
        lines = text.strip().splitlines()[1:]
        regrouped: dict[int, list[int]] = {}
        for line in lines:
            pt, ball = (int(tok) for tok in line.split(","))
            regrouped.setdefault(ball, []).append(pt)
        assert all(tuple(regrouped[b.id]) == b.members for b in demo_cover.balls)
