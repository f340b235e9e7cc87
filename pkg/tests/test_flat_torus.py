"""Flat-torus embeddings: closed-form curvature, worst directions, optimizer."""

import math

import numpy as np
import pytest

from normcurve.curves import DiscreteCurve, discrete_curvature
from normcurve.flat_torus import (
    TorusEmbedding,
    curvature_bound,
    load_frequency_file,
    optimize_weights,
    product_family,
    save_frequency_file,
    torus_normal_curvature,
    torus_worst_direction,
    triangular_family,
)

SQRT32 = math.sqrt(1.5)


def test_validation():
    with pytest.raises(ValueError, match="integral"):
        TorusEmbedding(np.array([[1.5, 0.0]]), np.array([1.0]))
    with pytest.raises(ValueError, match="positive"):
        TorusEmbedding(np.array([[1, 0], [0, 1]]), np.array([1.0, -1.0]))
    with pytest.raises(ValueError, match="non-parallel"):
        TorusEmbedding(np.array([[1, 0], [2, 0]]), np.array([1.0, 1.0]))
    with pytest.raises(ValueError, match="nonzero"):
        TorusEmbedding(np.array([[0, 0]]), np.array([1.0]))
    with pytest.raises(ValueError, match="degenerate"):
        TorusEmbedding(np.array([[1, 0]]), np.array([1.0]))


def test_embedding_lies_on_sphere():
    torus = TorusEmbedding(triangular_family(2), np.array([0.7, 1.1, 0.4]))
    rng = np.random.default_rng(81)
    thetas = rng.uniform(0.0, 2.0 * math.pi, size=(100, 2))
    pts = torus.embed(thetas)
    assert np.max(np.abs(np.linalg.norm(pts, axis=1) - torus.sphere_radius)) <= 1e-12


def test_single_frequency_circle():
    torus = TorusEmbedding(np.array([[1]]), np.array([1.0]))
    assert torus_normal_curvature(torus, np.array([1.0])) == pytest.approx(1.0)
    ws = torus_worst_direction(torus)
    assert ws.value == pytest.approx(1.0, abs=1e-12)
    assert ws.value == pytest.approx(curvature_bound(1), abs=1e-12)


def test_triangular_family_direction_independent():
    torus = TorusEmbedding(triangular_family(2), np.ones(3))
    rng = np.random.default_rng(82)
    values = []
    for _ in range(500):
        u = rng.standard_normal(2)
        values.append(torus_normal_curvature(torus, u) * torus.sphere_radius)
    values = np.asarray(values)
    assert np.max(np.abs(values - SQRT32)) <= 1e-12
    assert np.var(values) <= 1e-18


def test_triangular_family_hand_oracle():
    # closed form: sum of fourth powers equals (quadratic form)^2 / 2 for
    # the three frequencies (1,0), (0,1), (1,1)
    rng = np.random.default_rng(83)
    w = 0.6
    torus = TorusEmbedding(triangular_family(2), np.full(3, w))
    for _ in range(50):
        p, q = rng.standard_normal(2)
        quartic = p**4 + q**4 + (p + q) ** 4
        quadratic = 2.0 * (p * p + p * q + q * q)
        assert quartic == pytest.approx(quadratic**2 / 2.0, rel=1e-12)
        kappa = torus_normal_curvature(torus, np.array([p, q]))
        assert kappa * torus.sphere_radius == pytest.approx(SQRT32, abs=1e-12)


def test_product_torus_axis_maximum():
    torus = TorusEmbedding(product_family(2), np.ones(2))
    # closed two-term form: kR along angle t is sqrt(2) * sqrt(1 - sin^2(2t)/2)
    for t in np.linspace(0.0, math.pi, 17):
        u = np.array([math.cos(t), math.sin(t)])
        expected = math.sqrt(2.0) * math.sqrt(1.0 - 0.5 * math.sin(2.0 * t) ** 2)
        got = torus_normal_curvature(torus, u) * torus.sphere_radius
        assert got == pytest.approx(expected, abs=1e-12)
    ws = torus_worst_direction(torus)
    assert ws.value == pytest.approx(math.sqrt(2.0), abs=1e-9)
    assert ws.value > SQRT32
    # the maximum sits on a coordinate axis
    axis_alignment = np.max(np.abs(ws.direction)) / np.linalg.norm(ws.direction)
    assert axis_alignment == pytest.approx(1.0, abs=1e-6)


def test_scale_invariance():
    torus = TorusEmbedding(triangular_family(2), np.array([1.0, 2.0, 0.5]))
    scaled = TorusEmbedding(triangular_family(2), 3.7 * np.array([1.0, 2.0, 0.5]))
    u = np.array([0.3, -1.2])
    v1 = torus_normal_curvature(torus, u) * torus.sphere_radius
    v2 = torus_normal_curvature(scaled, u) * scaled.sphere_radius
    assert abs(v1 - v2) <= 1e-12


def test_zero_direction_rejected():
    torus = TorusEmbedding(product_family(2), np.ones(2))
    with pytest.raises(ValueError, match="nonzero"):
        torus_normal_curvature(torus, np.zeros(2))


def test_worst_direction_certificate_fields():
    torus = TorusEmbedding(product_family(2), np.array([1.0, 1.3]))
    ws = torus_worst_direction(torus, grid=512)
    assert ws.grid_points == 512
    assert ws.grid_spacing > 0.0
    assert ws.certified_upper >= ws.value - 1e-12


def test_optimizer_recovers_triangular_optimum():
    result = optimize_weights(
        triangular_family(2), np.array([1.2, 0.9, 1.0]), budget=10_000, seed=0
    )
    assert result.evaluations <= 10_000
    assert abs(result.value - SQRT32) <= 1e-4
    assert np.max(np.abs(result.weights - result.weights[0])) <= 1e-3
    assert result.history[0][1] >= result.history[-1][1]


def test_optimizer_from_second_perturbed_start():
    result = optimize_weights(
        triangular_family(2), np.array([0.8, 1.3, 1.05]), budget=10_000, seed=1
    )
    assert abs(result.value - SQRT32) <= 1e-4


def test_optimizer_single_frequency():
    result = optimize_weights(np.array([[1]]), np.array([2.0]), budget=10)
    assert result.value == pytest.approx(1.0, abs=1e-12)


def test_optimizer_infeasible_start_rejected():
    with pytest.raises(ValueError, match="degenerate"):
        optimize_weights(np.array([[1, 0]]), np.array([1.0]), budget=10)


def test_n3_experiment_beats_product_torus():
    prod = TorusEmbedding(product_family(3), np.ones(3))
    prod_value = torus_worst_direction(prod, grid=1024).value
    assert prod_value == pytest.approx(math.sqrt(3.0), abs=1e-6)
    result = optimize_weights(triangular_family(3), np.ones(6), budget=150, seed=0, grid=1024)
    assert result.value <= prod_value + 1e-9
    assert result.value >= curvature_bound(3) - 1e-6


def test_no_configuration_beats_the_bound():
    rng = np.random.default_rng(84)
    configs = [
        TorusEmbedding(product_family(2), np.ones(2)),
        TorusEmbedding(triangular_family(2), np.ones(3)),
        TorusEmbedding(np.array([[1, 0], [0, 1], [1, 1], [1, -1]]), np.ones(4)),
        TorusEmbedding(np.array([[1]]), np.ones(1)),
        TorusEmbedding(triangular_family(3), np.ones(6)),
    ]
    for _ in range(10):
        weights = rng.uniform(0.3, 2.0, size=3)
        configs.append(TorusEmbedding(triangular_family(2), weights))
    for torus in configs:
        grid = 1024 if torus.n == 3 else 4096
        ws = torus_worst_direction(torus, grid=grid)
        assert ws.value >= curvature_bound(torus.n) - 1e-6


def test_closed_form_against_finite_differences():
    torus = TorusEmbedding(triangular_family(2), np.array([0.9, 1.2, 0.6]))
    rng = np.random.default_rng(85)
    eps = 1e-4  # balances O(eps^2) truncation against O(ulp/eps^2) roundoff
    for _ in range(20):
        u = torus.unit_direction(rng.standard_normal(2))
        theta0 = rng.uniform(0.0, 2.0 * math.pi, size=2)
        plus = torus.embed(theta0 + eps * u)
        mid = torus.embed(theta0)
        minus = torus.embed(theta0 - eps * u)
        second = (plus - 2.0 * mid + minus) / eps**2
        assert np.linalg.norm(second) == pytest.approx(
            torus_normal_curvature(torus, u), abs=1e-6
        )
        # acceleration is normal: orthogonal to both coordinate tangents
        first = (plus - minus) / (2.0 * eps)
        assert abs(first @ second) <= 1e-5


def test_consistency_with_discrete_curve_machinery():
    # straight lines in angle space are geodesics; their images sampled at
    # equal arc length must show the closed-form curvature
    torus = TorusEmbedding(triangular_family(2), np.ones(3) / math.sqrt(3.0))
    rng = np.random.default_rng(86)
    u = torus.unit_direction(rng.standard_normal(2))
    h = 5e-4
    ts = h * np.arange(3000)
    theta0 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    pts = torus.embed(theta0 + ts[:, None] * u)
    curve = DiscreteCurve(pts, nominal_step=h, edge_tol=1e-8)
    kappa = discrete_curvature(curve)
    expected = torus_normal_curvature(torus, u)
    assert np.max(np.abs(kappa - expected)) <= 1e-6


def test_frequency_file_roundtrip(tmp_path):
    path = tmp_path / "freqs.txt"
    freqs = triangular_family(2)
    weights = np.array([1.0, 0.5, 0.25])
    save_frequency_file(path, freqs, weights)
    back_f, back_w = load_frequency_file(path)
    assert np.array_equal(back_f, freqs)
    assert np.allclose(back_w, weights, rtol=0.0, atol=0.0)
    with pytest.raises(ValueError, match="expected"):
        bad = tmp_path / "bad.txt"
        bad.write_text("1,0 1.0 extra\n")
        load_frequency_file(bad)
    with pytest.raises(ValueError, match="no frequency"):
        empty = tmp_path / "empty.txt"
        empty.write_text("# nothing\n")
        load_frequency_file(empty)
