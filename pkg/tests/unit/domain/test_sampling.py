"""
Sampling Unit Tests

격자 샘플링, 재구성, bump, aliasing witness, Hölder 상한 테스트
"""
import numpy as np
import pytest

from src.core.exceptions import ConfigError, DilatedOverlapError, NoWitnessError
from src.domain.entities.field import TorusModel
from src.domain.geometry.expression import parse_expression
from src.domain.geometry.rasterizer import rasterize_covering
from src.domain.sampling.bounds import kernel_sums, plancherel_polya_bound, product_bound, product_field
from src.domain.sampling.bump import BumpSpec, build_bump
from src.domain.sampling.lattice import reconstruct_from_samples, sample_lattice
from src.domain.sampling.witness import aliasing_witness, locate_witness_ball
from src.domain.spectral.generators import random_bandlimited
from src.domain.spectral.norms import lp_norm, lp_norm_samples


class TestLatticeSampling:
    """sample_lattice / reconstruct_from_samples 테스트"""

    def test_sample_shape(self, random_field):
        """샘플은 (M,)*n"""
        assert sample_lattice(random_field).values.shape == (8, 8)

    def test_reconstruction_is_exact_for_single_cover(self, random_field, counterexample_raster):
        """잔여류를 한 번씩 덮으면 F = χ_K G 가 정확한 재구성"""
        rebuilt = reconstruct_from_samples(sample_lattice(random_field), counterexample_raster)

        assert np.allclose(rebuilt.spectrum, random_field.spectrum, atol=1e-10)

    def test_reconstruction_with_bump(self):
        """φ = 1 on K 인 bump 로도 정확한 재구성"""
        raster = rasterize_covering(parse_expression("cube(1,1;2)"), 32)
        field = random_bandlimited(2, raster)
        bump = BumpSpec(epsilon=1.6)

        rebuilt = reconstruct_from_samples(sample_lattice(field), raster, bump)

        assert np.allclose(rebuilt.spectrum, field.spectrum, atol=1e-10)

    def test_overlapping_bump_rejected(self):
        """bump 지지집합의 이동이 겹치면 DilatedOverlapError"""
        raster = rasterize_covering(parse_expression("cube(0,0;2pi)"), 16, pad=1)
        field = random_bandlimited(0, raster)

        with pytest.raises(DilatedOverlapError):
            reconstruct_from_samples(sample_lattice(field), raster, BumpSpec(epsilon=2.0))


class TestBump:
    """build_bump 테스트"""

    def test_bump_is_one_on_mask(self):
        """0 ≤ φ ≤ 1, mask 위 1, 지지집합 ⊃ mask"""
        raster = rasterize_covering(parse_expression("cube(1,1;2)"), 32)
        phi = build_bump(raster, BumpSpec(epsilon=1.6))

        assert phi.min() >= 0.0 and phi.max() <= 1.0
        assert np.all(phi[raster.mask] == 1.0)
        assert np.count_nonzero(phi) > np.count_nonzero(raster.mask)

    def test_default_is_indicator(self, ball_raster):
        """bump 없으면 χ_K"""
        assert np.array_equal(build_bump(ball_raster), ball_raster.mask.astype(float))

    def test_invalid_spec(self):
        with pytest.raises(ConfigError):
            BumpSpec(epsilon=0.0)


class TestAliasingWitness:
    """aliasing witness 테스트"""

    def test_witness_vanishes_on_lattice(self, big_ball_raster):
        """0 이 아니지만 정수 샘플은 모두 0"""
        witness = aliasing_witness(big_ball_raster)
        samples = sample_lattice(witness).values

        assert lp_norm(witness, 2) > 0
        assert np.max(np.abs(samples)) <= 1e-10 * np.max(np.abs(witness.values))
        assert np.all(witness.spectrum[~big_ball_raster.mask] == 0)

    def test_witness_ball_inside_overlap(self, big_ball_raster):
        """반지름이 가장 큰 이동의 공"""
        ball = locate_witness_ball(big_ball_raster)

        assert any(ball.shift)
        assert ball.radius > 1.0

    def test_fundamental_domain_has_no_witness(self, counterexample_raster):
        """겹침이 없으면 witness 없음"""
        with pytest.raises(NoWitnessError):
            aliasing_witness(counterexample_raster)

    def test_zero_shift_rejected(self, big_ball_raster):
        with pytest.raises(ConfigError):
            locate_witness_ball(big_ball_raster, (0, 0))


class TestHolderBounds:
    """Hölder 상한은 이산 모델에서 넘지 않음"""

    @pytest.mark.parametrize("p", [1.5, 3.0])
    def test_plancherel_polya(self, counterexample_raster, p):
        """‖f|ℤⁿ‖_{ℓ^p} ≤ C_PP ‖f‖_p"""
        bound = plancherel_polya_bound(counterexample_raster, p)

        for seed in range(5):
            field = random_bandlimited(seed, counterexample_raster)
            ratio = lp_norm_samples(sample_lattice(field), p) / lp_norm(field, p)
            assert ratio <= bound * (1 + 1e-9)

    @pytest.mark.parametrize("p", [1.5, 3.0])
    def test_product_bound(self, counterexample_raster, p):
        """‖φG‖_{𝓕L^p} ≤ C_φ ‖c‖_{ℓ^p}"""
        model = TorusModel.for_raster(counterexample_raster)
        phi = counterexample_raster.mask.astype(float)
        bound = product_bound(counterexample_raster, p, model=model)
        rng = np.random.default_rng(8)

        for _ in range(5):
            coefficients = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
            field = product_field(coefficients, phi, model)
            assert lp_norm(field, p) <= bound * lp_norm_samples(coefficients, p) * (1 + 1e-9)

    def test_p2_bounds_at_least_one(self, counterexample_raster):
        """p = 2 샘플링은 등거리이므로 C_PP ≥ 1"""
        assert plancherel_polya_bound(counterexample_raster, 2.0) >= 1.0 - 1e-9

    def test_kernel_sums_positive(self, cube_raster):
        model = TorusModel.for_raster(cube_raster)
        l1, lattice_max = kernel_sums(cube_raster.mask.astype(float), model)

        assert l1 > 0 and lattice_max > 0


class TestOverlappingBallWitness:
    """r = 3π/2 원판: 이웃 이동과 겹치므로 샘플이 정확히 0인 field 존재"""

    @pytest.mark.parametrize("M", [8, 16])
    def test_samples_vanish(self, M):
        raster = rasterize_covering(parse_expression("ball(0,0;1.5pi)"), M)

        witness = aliasing_witness(raster)

        peak = np.max(np.abs(witness.values))
        assert lp_norm(witness, 2) > 0
        assert np.max(np.abs(sample_lattice(witness).values)) <= 1e-12 * peak


class TestMarginCubeReconstruction:
    """한 변 2π − 0.5 정육면체: 이동들이 서로소라 샘플에서 정확히 복원"""

    EXPRESSION = "cube(0.25,0.25;5.783185307179586)"

    def test_indicator_reconstruction(self):
        raster = rasterize_covering(parse_expression(self.EXPRESSION), 16)

        for seed in range(100):
            field = random_bandlimited(seed, raster)
            rebuilt = reconstruct_from_samples(sample_lattice(field), raster)
            error = np.linalg.norm(rebuilt.values - field.values) / np.linalg.norm(field.values)
            assert error < 1e-10

    def test_bump_reconstruction(self):
        """ρ₁ = 1 칸 dilation 의 φ 로도 복원 (박스 한 칸 pad)"""
        raster = rasterize_covering(parse_expression(self.EXPRESSION), 32, pad=1)
        bump = BumpSpec(0.6)
        assert bump.radii(raster.grid.spacing, 2)[0] == 1

        for seed in range(10):
            field = random_bandlimited(seed, raster)
            rebuilt = reconstruct_from_samples(sample_lattice(field), raster, bump)
            error = np.linalg.norm(rebuilt.values - field.values) / np.linalg.norm(field.values)
            assert error < 1e-10


class TestProductBoundWithBumps:
    """서로 다른 두 φ 에 대해 ‖φG‖_{𝓕L^p} ≤ C_φ ‖c‖_{ℓ^p} (100 seed)"""

    @pytest.mark.parametrize("bump", [BumpSpec(1.2), BumpSpec(2.4, order=1)])
    @pytest.mark.parametrize("p", [1.5, 4.0])
    def test_never_exceeded(self, bump, p):
        raster = rasterize_covering(parse_expression("ball(0,0;pi)"), 16)
        model = TorusModel.for_raster(raster)
        phi = build_bump(raster, bump)
        bound = product_bound(raster, p, bump, model)

        for seed in range(100):
            rng = np.random.default_rng(seed)
            coefficients = rng.standard_normal(model.lattice_shape) + 1j * rng.standard_normal(model.lattice_shape)
            field = product_field(coefficients, phi, model)
            assert lp_norm(field, p) <= bound * lp_norm_samples(coefficients, p) * (1 + 1e-9)
