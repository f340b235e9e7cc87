"""Minimal enclosing ball: feasibility, optimality witnesses, known sets."""

import math

import numpy as np
import pytest

from normcurve import veronese
from normcurve.ball import min_enclosing_ball


def test_empty_rejected():
    with pytest.raises(ValueError):
        min_enclosing_ball(np.zeros((0, 3)))


def test_single_point():
    b = min_enclosing_ball(np.array([[1.0, 2.0, 3.0]]))
    assert b.radius == 0.0
    assert np.array_equal(b.center, [1.0, 2.0, 3.0])


def test_two_points():
    b = min_enclosing_ball(np.array([[0.0, 0.0], [2.0, 0.0]]), tol=1e-5)
    assert b.radius == pytest.approx(1.0, abs=1e-4)
    assert np.allclose(b.center, [1.0, 0.0], atol=1e-4)


def test_equilateral_triangle():
    pts = np.array(
        [[math.cos(a), math.sin(a)] for a in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)]
    ) / math.sqrt(3.0)  # unit side length
    assert np.linalg.norm(pts[0] - pts[1]) == pytest.approx(1.0, abs=1e-12)
    b = min_enclosing_ball(pts, tol=1e-5)
    assert b.radius == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-4)


def test_feasibility_and_half_diameter_on_random_sets():
    rng = np.random.default_rng(61)
    for _ in range(20):
        pts = rng.standard_normal((rng.integers(2, 200), rng.integers(2, 8)))
        b = min_enclosing_ball(pts, tol=1e-4)
        d = np.linalg.norm(pts - b.center, axis=1)
        assert np.max(d) <= b.radius * (1.0 + 1e-4) + 1e-12  # feasible
        diam = 0.0
        for p in pts[:: max(1, len(pts) // 20)]:
            diam = max(diam, np.max(np.linalg.norm(pts - p, axis=1)))
        assert b.radius >= diam / 2.0 - 1e-9  # optimality witness
        assert b.lower_bound <= b.radius + 1e-12


def test_monotonicity_under_insertion():
    rng = np.random.default_rng(62)
    pts = rng.standard_normal((50, 4))
    base = min_enclosing_ball(pts, tol=1e-5).radius
    extended = min_enclosing_ball(
        np.vstack([pts, rng.standard_normal((10, 4))]), tol=1e-5
    ).radius
    assert extended >= base - 1e-5 * base


def test_determinism_for_fixed_order():
    rng = np.random.default_rng(63)
    pts = rng.standard_normal((100, 5))
    b1 = min_enclosing_ball(pts, tol=1e-5)
    b2 = min_enclosing_ball(pts, tol=1e-5)
    assert b1.radius == b2.radius
    assert np.array_equal(b1.center, b2.center)
    assert b1.iterations == b2.iterations


def test_veronese_rp2_cloud():
    spc = veronese.space("real", 2)
    rng = np.random.default_rng(64)
    pts = veronese.sample_points(spc, 300, rng)
    b = min_enclosing_ball(pts, tol=1e-4)
    assert b.radius == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-4)
    assert np.linalg.norm(b.center) <= 1e-3
