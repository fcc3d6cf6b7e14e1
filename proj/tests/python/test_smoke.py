import math

import pytest

import dartbound as db


def test_diameter_and_enclosing_circle():
    tri = db.triangle_construction(3)
    assert len(tri) == 3
    assert math.isclose(db.diameter(tri), 1.0, abs_tol=1e-12)
    center, radius = db.smallest_enclosing_circle(tri)
    assert math.isclose(radius, 1.0 / math.sqrt(3.0), abs_tol=1e-12)
    assert len(center) == 2


def test_max_coverage_counts():
    pts = db.triangle_construction(30)
    assert db.max_coverage(pts, 0.45)["count"] == 10
    assert db.max_coverage(pts, 0.52)["count"] == 20
    assert db.max_coverage(pts, 0.58)["count"] == 30
    assert db.max_coverage(pts, 0.45, mode="deflated", tau=1e-9)["count"] == 10
    with pytest.raises(ValueError):
        db.max_coverage(pts, 0.45, mode="sideways")


def test_bounds_and_table():
    assert db.lower_bound(25, 1.0 / 3.0) == (5, "six-triangles")
    assert db.upper_bound(10, 0.45) == (4, "triangle")
    rows = db.table_reproduce()
    assert len(rows) == 10
    assert rows[0] == {
        "n": 12,
        "r": 0.6,
        "lower": 12,
        "upper": 12,
        "lower_witness": "jung-disk",
        "upper_witness": "trivial",
    }


def test_step_function_data():
    series = db.step_function_data([0.3, 0.45, 0.6])
    assert [r for r, _, _ in series] == [0.3, 0.45, 0.6]
    r, lo, hi = series[1]
    assert lo == pytest.approx(1.0 / 3.0)
    assert hi == pytest.approx(1.0 / 3.0)
    assert len(db.default_r_grid()) >= 190


def test_certificates_and_pigeonhole():
    certs = db.builtin_certificates()
    assert all(c["verified"] is not None for c in certs)
    seven = next(c for c in certs if len(c["centers"]) == 7)
    assert seven["radius"] == pytest.approx(0.25)
    assert db.pigeonhole_bound(seven, 28) == 4
    assert db.verify_covering(seven, grid_h=1e-3) == "certified"


def test_optimize_covering():
    cert = db.optimize_covering(k=1, restarts=2, seed=1)
    assert cert["verified"] is not None
    assert cert["radius"] <= 1.0 / math.sqrt(3.0) + 1e-3
    assert db.pigeonhole_bound(cert, 9) == 9


def test_embedding():
    ring = db.uniform_circle_construction(9)
    embedded = db.embed_in_hexagon(ring)
    assert len(embedded["points"]) == 9
    assert "angle" in embedded and "translation" in embedded


def test_search():
    result = db.extremal_search(3, 0.45, seed=1, iterations=1500, restarts=2)
    assert result["objective"] == 1
    assert len(result["trace"]) == 2
    assert math.isclose(db.diameter(result["best"]), 1.0, abs_tol=1e-9)


def test_pointset_io(tmp_path):
    pts = db.normalize_diameter([(0.0, 0.0), (2.0, 0.0), (1.0, 0.5)])
    path = tmp_path / "points.csv"
    db.save_pointset(pts, str(path))
    back = db.load_pointset(str(path))
    assert back == pts
