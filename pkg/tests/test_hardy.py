"""Hardy split, Cauchy transform, traces, jump identity, evaluation."""

import numpy as np
import pytest

from diskdual import (
    BOUNDARY_EVALUATION_THRESHOLD,
    BoundaryDistribution,
    BoundaryProximityError,
    CurveDescriptor,
    EvaluationDomainError,
    ExteriorFunction,
    InteriorFunction,
    QuadratureGrid,
    cauchy_integral_quadrature,
    cauchy_transform,
    evaluate_exterior,
    evaluate_interior,
    fourier_analyze,
    fourier_synthesize,
    hardy_projections,
    jump_residual,
    koethe_pairing,
    sobolev_norm,
    trace_exterior,
    trace_interior,
)


# ---------------------------------------------------------------- traces


def test_trace_interior_examples():
    t = trace_interior(InteriorFunction([1.0, 1.0]))
    assert t.coefficient(0) == 1.0 and t.coefficient(1) == 1.0
    assert t.coefficient(-1) == 0j
    assert trace_interior(InteriorFunction([0.0])).is_zero()


def test_trace_exterior_examples():
    assert trace_exterior(ExteriorFunction([1.0])).coefficient(-1) == 1.0
    assert trace_exterior(ExteriorFunction([0.0, 2.0])).coefficient(-2) == 2.0
    assert trace_exterior(ExteriorFunction(np.zeros(0))).is_zero()


def test_trace_norm_equals_direct_weighted_sum():
    rng = np.random.default_rng(1)
    a = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    u = InteriorFunction(a, index=1.0)
    n = np.arange(6, dtype=float)
    direct = np.sqrt(np.sum((1 + n * n) ** (u.index - 0.5) * np.abs(a) ** 2))
    assert sobolev_norm(trace_interior(u), u.index - 0.5) == pytest.approx(direct, rel=1e-15)


# ---------------------------------------------------------------- transform


def test_cauchy_transform_reproduces_interior_value():
    f = BoundaryDistribution.from_modes({0: 1.0, 1: 1.0})
    assert cauchy_transform(f, 0.5) == pytest.approx(1.5)
    assert cauchy_transform(f, 2.0) == 0j


def test_cauchy_transform_exterior_branch():
    f = BoundaryDistribution.from_modes({-1: 1.0})
    assert cauchy_transform(f, 2.0) == pytest.approx(-0.5)
    assert -cauchy_transform(f, 2.0) == pytest.approx(evaluate_exterior(ExteriorFunction([1.0]), 2.0))


def test_cauchy_transform_refuses_near_circle_and_names_threshold():
    f = BoundaryDistribution.from_modes({0: 1.0})
    with pytest.raises(BoundaryProximityError, match="1e-09"):
        cauchy_transform(f, 1.0 + 1e-12)
    assert BOUNDARY_EVALUATION_THRESHOLD == 1e-9


def test_reproduction_identity_is_coefficient_exact():
    rng = np.random.default_rng(4)
    for _ in range(20):
        u = InteriorFunction(rng.standard_normal(9) + 1j * rng.standard_normal(9))
        z = 0.8 * (rng.standard_normal() + 1j * rng.standard_normal()) / 2
        if abs(z) >= 1 - 1e-9:
            continue
        assert cauchy_transform(trace_interior(u), z) == evaluate_interior(u, z)
        assert cauchy_transform(trace_interior(u), 1.5 + 0.2j) == 0j


def test_exterior_reproduction_identity():
    rng = np.random.default_rng(8)
    for _ in range(20):
        v = ExteriorFunction(rng.standard_normal(7) + 1j * rng.standard_normal(7))
        z = 1.5 + rng.random() * 2 + 1j * rng.standard_normal()
        assert -cauchy_transform(trace_exterior(v), z) == evaluate_exterior(v, z)
        assert cauchy_transform(trace_exterior(v), 0.4j) == 0j


# ---------------------------------------------------------------- projections


def test_hardy_projection_frequency_split():
    f = BoundaryDistribution.from_modes({-1: 1.0, 0: 5.0, 1: 1.0})
    u, v_plus = hardy_projections(f)
    np.testing.assert_array_equal(u.coeffs, [5.0, 1.0])
    np.testing.assert_array_equal(v_plus.coeffs, [-1.0])


def test_hardy_projection_interior_data_has_no_exterior_part():
    f = BoundaryDistribution.from_modes({0: 2.0, 3: 1.0})
    _, v_plus = hardy_projections(f)
    assert v_plus.coeffs.size == 0


def test_hardy_projection_matches_quadrature_cauchy_integral():
    rng = np.random.default_rng(21)
    coeffs = rng.standard_normal(17) + 1j * rng.standard_normal(17)
    f = BoundaryDistribution(-8, coeffs)
    u, _ = hardy_projections(f)
    curve = CurveDescriptor.circle()
    grid = QuadratureGrid(128)
    vals = fourier_synthesize(f, grid.m)
    quad = cauchy_integral_quadrature(vals, curve, grid, 0.3)
    assert abs(quad - evaluate_interior(u, 0.3)) < 1e-10


def test_projections_are_complementary_idempotents():
    rng = np.random.default_rng(30)
    u = InteriorFunction(rng.standard_normal(5) + 1j * rng.standard_normal(5))
    ui, vi = hardy_projections(trace_interior(u))
    np.testing.assert_array_equal(ui.coeffs, u.coeffs)
    assert vi.coeffs.size == 0
    v = ExteriorFunction(rng.standard_normal(4) + 1j * rng.standard_normal(4))
    ue, ve = hardy_projections(trace_exterior(v))
    assert not np.any(ue.coeffs)
    # the exterior restriction of the transform of an exterior trace is -v
    np.testing.assert_array_equal(ve.coeffs, -v.coeffs)


def test_projection_index_bookkeeping():
    f = BoundaryDistribution.from_modes({-1: 1.0})
    u, v_plus = hardy_projections(f, boundary_index=0.5 - 2)  # data for scale s = 2
    assert u.index == v_plus.index == 1 - 2


# ---------------------------------------------------------------- jump


def test_jump_residual_is_exactly_zero_on_spectral_data():
    assert jump_residual(BoundaryDistribution.from_modes({-1: 1.0, 0: 5.0, 1: 1.0})) == 0.0
    rng = np.random.default_rng(2)
    for _ in range(20):
        f = BoundaryDistribution(-6, rng.standard_normal(13) + 1j * rng.standard_normal(13))
        assert jump_residual(f) == 0.0


def test_jump_residual_on_analyzed_smooth_samples():
    th = 2 * np.pi * np.arange(64) / 64
    samples = np.exp(np.cos(th)) * np.sin(3 * th) + 1j * np.cos(2 * th)
    assert jump_residual(fourier_analyze(samples)) < 1e-12


# ---------------------------------------------------------------- evaluation


def test_evaluate_interior_example():
    assert evaluate_interior(InteriorFunction([1.0, 2.0]), 0.5) == pytest.approx(2.0)


def test_evaluate_exterior_examples():
    assert evaluate_exterior(ExteriorFunction([1.0]), 2.0) == pytest.approx(0.5)
    # 3/z + 4/z^2 at 2i: 3/(2i) + 4/(-4) = -1 - 1.5i
    v = ExteriorFunction([3.0, 4.0])
    oracle = 3.0 / 2.0j + 4.0 / (2.0j) ** 2
    assert evaluate_exterior(v, 2.0j) == pytest.approx(oracle)
    assert oracle == pytest.approx(-1.0 - 1.5j)


def test_evaluation_domain_errors():
    with pytest.raises(EvaluationDomainError):
        evaluate_interior(InteriorFunction([1.0]), 1.0)
    with pytest.raises(EvaluationDomainError):
        evaluate_exterior(ExteriorFunction([1.0]), 0.5)


def test_exterior_values_vanish_at_infinity():
    v = ExteriorFunction([3.0, 4.0])
    assert abs(evaluate_exterior(v, 1e8)) < 1e-7


# ---------------------------------------------------------------- orthogonality


def test_interior_traces_pair_to_zero():
    rng = np.random.default_rng(9)
    for _ in range(20):
        u = InteriorFunction(rng.standard_normal(6) + 1j * rng.standard_normal(6))
        w = InteriorFunction(rng.standard_normal(8) + 1j * rng.standard_normal(8))
        assert koethe_pairing(trace_interior(u), trace_interior(w)) == 0j
