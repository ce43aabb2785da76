"""Acceptance suite: one test per release criterion, printed pass lines.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion. Every tolerance is fixed here; nothing is calibrated at
runtime.
"""

import csv
import json
import time
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

import reference_pipeline as ref
import tdabm
from instances import cloud_of, random_instance
from tdabm.cli import main

DEMO_AXES = ["build", "--axes", "X1,X2", "--outcome", "Y"]


def report(criterion: int, detail: str) -> None:
    print(f"[criterion {criterion}] PASS: {detail}")


def test_criterion_1_reference_ball_count(demo_csv, tmp_path):
    """500-point committed dataset, radius 0.4, lowest-index: exactly 7 balls."""
    args = DEMO_AXES + ["--input", str(demo_csv), "--epsilon", "0.4",
                        "--strategy", "lowest-index",
                        "--out-json", str(tmp_path / "g.json"),
                        "--out-svg", str(tmp_path / "g.svg")]
    start = time.perf_counter()
    result = CliRunner().invoke(main, args)
    elapsed = time.perf_counter() - start
    assert result.exit_code == 0, result.output
    assert "balls: 7" in result.output
    assert elapsed < 1.0
    # same count straight from the library
    pc, _ = tdabm.load_table(demo_csv, ["X1", "X2"], "Y")
    cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=0.4, strategy="lowest-index"))
    assert cover.n_balls == 7
    report(1, f"build reports 7 balls at epsilon=0.4 in {elapsed * 1e3:.0f} ms")


def test_criterion_2_coloration_extremes(demo_cloud, demo_cover, demo_graph):
    """Hottest ball sits at the landmark maximizing x1+x2; coldest at the minimum."""
    pc, _ = demo_cloud
    sums = pc.values.sum(axis=1)
    coloring = demo_graph.coloring
    landmarks = demo_graph.landmarks
    landmark_sums = [sums[lm - 1] for lm in landmarks]
    hottest = coloring.index(max(coloring))
    coldest = coloring.index(min(coloring))
    assert landmark_sums[hottest] == max(landmark_sums)
    assert landmark_sums[coldest] == min(landmark_sums)
    report(2, f"argmax color = ball {hottest + 1} (NE), argmin = ball {coldest + 1} (SW)")


def test_criterion_3_cover_invariants_1000_instances():
    """Completeness, packing, self-membership, boundary inclusivity; 0 failures."""
    checked = 0
    for i in range(1000):
        points, eps = random_instance(i, max_n=200, max_k=5)
        pc = cloud_of(points)
        cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=eps))
        seen = set()
        for ball in cover.balls:
            assert ball.landmark in ball.members          # self-membership
            seen.update(ball.members)
        assert seen == set(range(1, len(points) + 1))     # completeness
        landmarks = [b.landmark for b in cover.balls]
        for a_idx, a in enumerate(landmarks):             # epsilon-packing
            for b in landmarks[a_idx + 1:]:
                delta = points[a - 1] - points[b - 1]
                assert (delta * delta).sum() > eps * eps
        # a point at distance exactly epsilon is inside the ball
        k = points.shape[1]
        boundary = np.zeros((2, k))
        boundary[1, 0] = eps
        assert tdabm.ball_membership(cloud_of(boundary), 1, eps) == [1, 2]
        checked += 1
    assert checked == 1000
    report(3, f"{checked} random instances, zero invariant violations")


def test_criterion_4_oracle_equivalence_100_instances():
    """Cover, edges, strengths and mean coloring equal the brute-force oracle."""
    for i in range(100):
        points, eps = random_instance(i + 5000, max_n=50, max_k=4)
        pc = cloud_of(points)
        values = np.random.default_rng(i).normal(size=len(points))

        cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=eps))
        graph = tdabm.color_graph(tdabm.build_graph(cover), cover, values)

        oracle_balls = ref.greedy_cover(points.tolist(), eps)
        assert [(b.landmark, list(b.members)) for b in cover.balls] == oracle_balls
        assert ([(e.source, e.target, e.strength) for e in graph.edges]
                == ref.intersection_edges(oracle_balls))
        assert graph.coloring == ref.mean_colors(oracle_balls, values.tolist())
    report(4, "100 instances equal the brute-force pipeline exactly")


def test_criterion_5_byte_determinism(demo_csv, tmp_path):
    """Both strategies and the sweep produce byte-identical outputs on reruns."""
    runner = CliRunner()

    def run_all(into: Path) -> dict[str, bytes]:
        into.mkdir()
        low = DEMO_AXES + ["--input", str(demo_csv), "--epsilon", "0.4",
                           "--out-json", str(into / "low.json"),
                           "--out-svg", str(into / "low.svg")]
        rnd = DEMO_AXES + ["--input", str(demo_csv), "--epsilon", "0.4",
                           "--strategy", "random", "--seed", "7",
                           "--out-json", str(into / "rnd.json"),
                           "--out-svg", str(into / "rnd.svg")]
        swp = ["sweep", "--input", str(demo_csv), "--axes", "X1,X2",
               "--outcome", "Y", "--radii", "0.2,0.4",
               "--out-dir", str(into / "sweep")]
        for args in (low, rnd, swp):
            result = runner.invoke(main, args)
            assert result.exit_code == 0, result.output
        return {p.relative_to(into).as_posix(): p.read_bytes()
                for p in sorted(into.rglob("*")) if p.is_file()}

    first = run_all(tmp_path / "run1")
    second = run_all(tmp_path / "run2")
    assert first.keys() == second.keys()
    assert first == second
    report(5, f"{len(first)} files byte-identical across reruns "
              "(lowest-index, random seed 7, sweep)")


def test_criterion_6_two_path_sd_coloring(demo_csv, tmp_path):
    """recolor --agg sd equals an external group-by over the p2b CSV, exactly."""
    runner = CliRunner()
    graph_json = tmp_path / "g.json"
    p2b = tmp_path / "p2b.csv"
    sd_json = tmp_path / "sd.json"
    result = runner.invoke(main, DEMO_AXES + [
        "--input", str(demo_csv), "--epsilon", "0.4",
        "--out-json", str(graph_json), "--out-p2b", str(p2b)])
    assert result.exit_code == 0, result.output
    result = runner.invoke(main, [
        "recolor", "--graph-json", str(graph_json), "--input", str(demo_csv),
        "--column", "Y", "--agg", "sd", "--out-json", str(sd_json)])
    assert result.exit_code == 0, result.output

    y = tdabm.column_values(tdabm.read_frame(demo_csv), "Y")
    groups: dict[int, list[float]] = {}
    with open(p2b, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            groups.setdefault(int(row["ball"]), []).append(float(y[int(row["pt"]) - 1]))
    external = [tdabm.aggregate("sd", groups[b]) for b in sorted(groups)]

    _, graph = tdabm.from_json(graph_json.read_text(encoding="utf-8"))
    via_set_coloring = tdabm.set_coloring(graph, external).coloring
    via_cli = json.loads(sd_json.read_text(encoding="utf-8"))["coloring"]
    assert via_cli == via_set_coloring
    report(6, "sd recoloring equals the external group-by exactly")


def test_criterion_7_size_scale_contract():
    """Affine endpoints, monotonicity, equal-counts midpoint; tol 1e-12."""
    rng = np.random.default_rng(77)
    for _ in range(100):
        scale = tdabm.SizeScale(float(rng.uniform(1, 10)), float(rng.uniform(10, 40)))
        if rng.random() < 0.1:
            counts = [int(rng.integers(1, 10**6))] * int(rng.integers(1, 30))
        else:
            counts = rng.integers(1, 10**6, size=int(rng.integers(1, 60))).tolist()
        sizes = tdabm.size_scale(counts, scale)
        lo, hi = min(counts), max(counts)
        if lo == hi:
            mid = (scale.min_size + scale.max_size) / 2
            assert all(abs(s - mid) <= 1e-12 for s in sizes)
        else:
            assert abs(sizes[counts.index(lo)] - scale.min_size) <= 1e-12
            assert abs(sizes[counts.index(hi)] - scale.max_size) <= 1e-12
        order = sorted(range(len(counts)), key=counts.__getitem__)
        assert all(sizes[a] <= sizes[b] for a, b in zip(order, order[1:]))
    report(7, "100 random cardinality vectors satisfy the affine contract")


def test_criterion_8_export_roundtrip_100_instances():
    """from_json(to_json(...)) is the identity; p2b rows = total cardinality."""
    for i in range(100):
        points, eps = random_instance(i + 9000, max_n=60, max_k=4)
        pc = cloud_of(points)
        cover = tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=eps))
        graph = tdabm.color_graph(tdabm.build_graph(cover), cover, points[:, 0])
        cover2, graph2 = tdabm.from_json(tdabm.to_json(cover, graph))
        assert cover2 == cover and graph2 == graph
        csv_rows = tdabm.to_csv_points_to_balls(
            tdabm.points_to_balls(cover)).strip().splitlines()[1:]
        assert len(csv_rows) == sum(v.size for v in graph.vertices)
    report(8, "100 instances round-trip losslessly through JSON and CSV")


def test_criterion_9_grid_membership_soundness():
    """Grid-index membership equals brute force on 200 random instances."""
    for i in range(200):
        points, eps = random_instance(i + 13000, max_n=120, max_k=3)
        pc = cloud_of(points)
        grid = tdabm.GridIndex(pc.values, eps)
        for landmark in range(1, pc.n_points + 1):
            fast = tdabm.ball_membership(pc, landmark, eps, index=grid)
            slow = tdabm.ball_membership(pc, landmark, eps)
            assert fast == slow
    report(9, "200 instances: grid and brute-force member sets identical")
