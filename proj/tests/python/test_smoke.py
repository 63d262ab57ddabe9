import math

import pytest

import heisgeo as hg


def test_group_law():
    r = hg.mul((1, 2, 3), (4, 5, 6))
    assert (r.x, r.y, r.t) == (5.0, 7.0, 15.0)
    p = hg.HPoint(0.3, -1.2, 2.0)
    e = hg.mul(p, hg.inv(p))
    assert (e.x, e.y, e.t) == (0.0, 0.0, 0.0)


def test_dilate_rotate_proj():
    d = hg.dilate(3.0, (1, 2, 3))
    assert (d.x, d.y, d.t) == (3.0, 6.0, 27.0)
    with pytest.raises(ValueError):
        hg.dilate(-1.0, (1, 2, 3))
    px = hg.proj_x((1, 2, 3))
    assert (px.x, px.y, px.t) == (0.0, 2.0, -1.0)
    assert hg.proj_t((1, 2, 3)) == (1.0, 2.0)


def test_distances():
    assert hg.koranyi_dist((0, 0, 0), (1, 1, 0)) == pytest.approx(math.sqrt(2), rel=1e-12)
    assert hg.cc_dist((0, 0, 0), (0, 0, 1)) == pytest.approx(math.sqrt(math.pi), rel=1e-8)
    assert hg.cc_dist_vertical((0, 0, 0), 4.0) == pytest.approx(2 * math.sqrt(math.pi))
    assert hg.cc_dist((0, 0, 0), (1, 0, 1)) == pytest.approx(1.2909522564138859, rel=1e-9)


def test_bang_bang_and_lengths():
    path = hg.bang_bang((0, 0, 0), (0, 0, 1))
    assert path.cc_length() == pytest.approx(2.1213203435596426, rel=1e-12)
    poly = hg.as_polyline(path, 3)
    assert hg.pi_t_length(poly) == pytest.approx(path.cc_length(), rel=1e-12)
    end = path.end()
    assert hg.koranyi_dist(end, (0, 0, 1)) < 1e-12


def test_vertical_geodesic():
    arc = hg.vertical_geodesic((0, 0, 0), 1.0, n_samples=10000)
    assert arc.length() == pytest.approx(math.sqrt(math.pi), rel=1e-6)


def test_planner():
    A = hg.ObstacleSet()
    A.boxes = [hg.Box3(0.4, 0.6, -0.05, 0.05, -0.05, 0.05)]
    cfg = hg.PlanConfig()
    cfg.seed = 7
    r = hg.plan((0, 0, 0), (1, 0, 0), A, cfg)
    assert r.perturbed
    assert r.clearance_certificate > 0
    for seg in r.path.segments:
        assert hg.segment_clear(A, seg)


def test_maze_and_grid():
    tree = hg.build_maze(1, 1)
    assert tree.count(1) == 24
    est = hg.interior_crossing_cost(tree, 0, 0.25)
    assert est.reached and est.cost >= 40.0

    g = hg.GridSpec(hg.Box3(-12, 12, -12, 12, -1.5, 1.5), 0.2, 0.2, 0.25)
    around = hg.grid_pi_distance(hg.maze_level_union(tree, 0), (0, 0, 1), (0, 0, -1), g)
    assert around.reached and 20.0 <= around.cost <= 20.8

    again = hg.maze_from_json(tree.to_json())
    assert again.count(1) == 24 and again.to_json() == tree.to_json()


def test_dimension_and_dct():
    assert hg.dct_bounds(2.0) == (2.0, 3.0)
    assert hg.dct_bounds(3.0) == (4.0, 4.0)
    with pytest.raises(ValueError):
        hg.dct_bounds(5.0)

    pts = [(i / 2000.0, (i * 37 % 2000) / 2000.0, 0.0) for i in range(2000)]
    est = hg.box_dimension(pts, hg.Gauge.Euclidean, [1 / 2, 1 / 4, 1 / 8, 1 / 16, 1 / 32, 1 / 64])
    assert 1.5 < est.slope < 2.5


def test_assemble():
    trees = [hg.build_maze(n, 1) for n in (1, 2, 3)]
    A = hg.assemble_A(trees)
    assert [c.n for c in A.components] == [1, 2, 3]
    assert all(c.radius < 1 / (10 * c.n**2) for c in A.components)
