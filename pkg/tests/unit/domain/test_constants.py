"""
Sampling / Interpolation Constant Unit Tests

p = 2 등거리, aliasing, 덮임 조건, Hölder 교차 warm start 테스트
"""
import numpy as np
import pytest

from src.core.exceptions import CoverageViolationError
from src.domain.entities.field import SampleSequence, TorusModel
from src.domain.geometry.expression import parse_expression
from src.domain.geometry.rasterizer import rasterize_covering
from src.domain.optimization.power_method import dual_map
from src.domain.sampling.bounds import product_bound
from src.domain.sampling.constants import (
    aliasing_kernel_element,
    estimate_interpolation_constant,
    estimate_sampling_constant,
    interpolation_constant,
    minimal_interpolant,
    sampling_constant,
)
from src.domain.sampling.lattice import sample_lattice
from src.domain.spectral.generators import random_bandlimited
from src.domain.spectral.norms import lp_norm


class TestSamplingConstant:
    """C_samp 테스트"""

    def test_p2_is_isometry(self, counterexample_raster, fast_optimizer):
        """fundamental domain 에서 p = 2 상수는 1"""
        estimate = estimate_sampling_constant(counterexample_raster, 2.0, optimizer=fast_optimizer)

        assert estimate.kind == "sampling"
        assert estimate.value == pytest.approx(1.0, rel=1e-9)
        assert estimate.converged
        assert estimate.flags == []
        assert estimate.quadrature_error < 1e-9

    @pytest.mark.parametrize("expression", ["cube(0,0;2pi)", "counterexampleK"])
    @pytest.mark.parametrize("M", [8, 16, 32])
    def test_p2_is_one_across_resolutions(self, expression, M, fast_optimizer):
        """fundamental domain 의 p = 2 상수는 해상도와 무관하게 1"""
        raster = rasterize_covering(parse_expression(expression), M, name=expression)

        estimate = estimate_sampling_constant(raster, 2.0, optimizer=fast_optimizer)

        assert estimate.value == pytest.approx(1.0, abs=1e-6)
        assert estimate.M == M

    def test_p2_restricted_to_covered_residues(self, ball_raster, fast_optimizer):
        """덮이지 않은 잔여류는 사영으로 제외 → 여전히 1"""
        estimate = estimate_sampling_constant(ball_raster, 2.0, optimizer=fast_optimizer)

        assert estimate.value == pytest.approx(1.0, rel=1e-9)

    def test_aliasing_reported(self, big_ball_raster, fast_optimizer):
        """잔여류 중복이면 aliasing flag 와 매우 큰 ratio"""
        estimate = estimate_sampling_constant(big_ball_raster, 3.0, optimizer=fast_optimizer)

        assert "aliasing" in estimate.flags
        assert estimate.value > 1e8
        assert estimate.restarts == 0

    def test_kernel_element_vanishes_on_lattice(self, big_ball_raster, counterexample_raster):
        """e_{i1} − e_{i2} 의 정수 샘플은 0, 중복이 없으면 None"""
        kernel = aliasing_kernel_element(big_ball_raster, TorusModel.for_raster(big_ball_raster))

        scale = np.max(np.abs(kernel.values))
        assert scale > 0
        assert np.max(np.abs(sample_lattice(kernel).values)) < 1e-10 * scale
        assert aliasing_kernel_element(counterexample_raster, TorusModel.for_raster(counterexample_raster)) is None

    def test_p4_below_product_bound(self, counterexample_raster, fast_optimizer):
        """추정치는 엄밀한 상한 C_φ (φ = χ_K) 를 넘지 않음"""
        estimate = estimate_sampling_constant(counterexample_raster, 4.0, optimizer=fast_optimizer)

        assert estimate.value <= product_bound(counterexample_raster, 4.0) * (1 + 1e-9)
        assert max(estimate.per_restart_ratios) <= estimate.value
        assert estimate.quadrature_error >= 0.0

    def test_seed_is_recorded(self, counterexample_raster, fast_optimizer):
        estimate = estimate_sampling_constant(counterexample_raster, 3.0, optimizer=fast_optimizer, seed=9)

        assert estimate.seed == 9
        assert estimate.M == 8
        assert estimate.s == 5


class TestInterpolationConstant:
    """C_interp 테스트"""

    def test_p2_is_one(self, counterexample_raster, fast_optimizer):
        """p = 2 에서 ‖S∘Π_K‖ = 1, 최소 보간 함수 ratio 도 1"""
        estimate = estimate_interpolation_constant(counterexample_raster, 2.0, optimizer=fast_optimizer)

        assert estimate.kind == "interpolation"
        assert estimate.value == pytest.approx(1.0, rel=1e-9)
        assert estimate.restricted_value == pytest.approx(1.0, rel=1e-9)
        assert "approximate_minimizer" not in estimate.flags

    def test_requires_coverage(self, ball_raster, fast_optimizer):
        """덮이지 않는 K 는 거부"""
        with pytest.raises(CoverageViolationError):
            estimate_interpolation_constant(ball_raster, 3.0, optimizer=fast_optimizer)

    def test_conjugate_warm_start_reaches_sampling_value(self, counterexample_raster, fast_optimizer):
        """C_samp(q) 최적 벡터의 쌍대 벡터에서 시작하면 그 값 이상"""
        p, q = 4.0, 4.0 / 3.0
        conjugate = sampling_constant(counterexample_raster, q, optimizer=fast_optimizer)
        warm = dual_map(conjugate.operator.matvec(conjugate.vector), q)

        interpolation = interpolation_constant(counterexample_raster, p, optimizer=fast_optimizer,
                                               warm_starts=[warm])

        assert interpolation.estimate.value >= conjugate.estimate.value * (1 - 1e-9)


class TestMinimalInterpolant:
    """minimal_interpolant 테스트"""

    def test_p2_equal_spread_interpolates(self, big_ball_raster):
        """p = 2 균등 분배는 샘플을 정확히 재현"""
        field = random_bandlimited(1, big_ball_raster)
        samples = sample_lattice(field)

        interpolant, approximate = minimal_interpolant(samples, big_ball_raster, 2.0)

        assert not approximate
        assert np.allclose(sample_lattice(interpolant).values, samples.values, atol=1e-10)
        assert lp_norm(interpolant, 2) <= lp_norm(field, 2) * (1 + 1e-9)

    def test_irls_keeps_samples(self, big_ball_raster):
        """p ≠ 2 IRLS 해도 샘플을 재현하고 approximate 로 표시"""
        field = random_bandlimited(1, big_ball_raster)
        samples = sample_lattice(field)

        interpolant, approximate = minimal_interpolant(samples, big_ball_raster, 4.0)

        assert approximate
        assert np.allclose(sample_lattice(interpolant).values, samples.values, atol=1e-8)
        assert np.isfinite(lp_norm(interpolant, 4.0))

    def test_single_cover_is_exact(self, counterexample_raster, random_field):
        """자유도가 없으면 (잔여류당 한 점) 유일한 보간 함수"""
        interpolant, approximate = minimal_interpolant(sample_lattice(random_field), counterexample_raster, 3.0)

        assert not approximate
        assert np.allclose(interpolant.spectrum, random_field.spectrum, atol=1e-10)

    def test_uncovered_component_rejected(self, ball_raster):
        """덮이지 않은 잔여류 성분이 있는 샘플"""
        model = TorusModel.for_raster(ball_raster)
        impulse = np.zeros(model.lattice_shape, dtype=complex)
        impulse[0, 0] = 1.0
        samples = SampleSequence(model, impulse)

        with pytest.raises(CoverageViolationError):
            minimal_interpolant(samples, ball_raster, 2.0)
