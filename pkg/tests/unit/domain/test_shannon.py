"""
Shannon 1D Baseline Unit Tests
"""
import math

import numpy as np
import pytest

from src.core.exceptions import ConfigError, GridMismatchError, SubNyquistError
from src.domain.entities.grid import RasterizedSet
from src.domain.sampling.lattice import sample_lattice
from src.domain.sampling.shannon import scaled_band, shannon_1d, shannon_aliasing_witness
from src.domain.spectral.generators import random_bandlimited
from src.domain.spectral.norms import lp_norm


class TestShannon1D:
    """h ≤ π/ω 등거리 테스트"""

    def test_nyquist_spacing_is_isometry(self):
        report = shannon_1d(1.0, math.pi)

        assert report.isometry_error < 1e-12
        assert report.reconstruction_error < 1e-10
        assert report.sample_norm == pytest.approx(report.field_norm, rel=1e-12)

    def test_oversampled_spacing(self):
        """h < π/ω 도 등거리"""
        report = shannon_1d(2.0, 1.0, resolution=32, seed=3)

        assert report.isometry_error < 1e-12
        assert report.seed == 3
        assert report.M == 32

    def test_given_field_is_checked(self):
        """축척 대역 위의 g 를 직접 넘기면 그 field 로 검사"""
        band = scaled_band(1.0, math.pi, 32)
        field = random_bandlimited(11, band)

        report = shannon_1d(1.0, math.pi, resolution=32, field=field)

        assert report.isometry_error < 1e-12
        assert report.field_norm == pytest.approx(math.sqrt(math.pi) * lp_norm(field, 2), rel=1e-12)

    def test_given_field_must_match_band_grid(self):
        field = random_bandlimited(0, scaled_band(1.0, math.pi, 16))

        with pytest.raises(GridMismatchError):
            shannon_1d(1.0, math.pi, resolution=32, field=field)

    def test_given_field_must_stay_in_band(self):
        """[−ωh, ωh] 밖 스펙트럼 거부"""
        grid = scaled_band(1.0, math.pi, 32).grid
        field = random_bandlimited(0, RasterizedSet(grid, np.ones(grid.shape, dtype=bool), name="all"))

        with pytest.raises(ConfigError):
            shannon_1d(1.0, 0.5 * math.pi, resolution=32, field=field)

    def test_sub_nyquist_rejected(self):
        with pytest.raises(SubNyquistError):
            shannon_1d(1.0, 1.1 * math.pi)


class TestShannonWitness:
    """h > π/ω 에서 샘플이 0인 field"""

    def test_witness_has_zero_samples(self):
        witness = shannon_aliasing_witness(1.0, 1.5 * math.pi)

        peak = np.max(np.abs(witness.values))
        assert lp_norm(witness, 2) > 0
        assert np.max(np.abs(sample_lattice(witness).values)) <= 1e-10 * peak

    def test_band_must_fit_torus(self):
        """ωh ≥ 2π 는 설정 오류"""
        with pytest.raises(ConfigError):
            scaled_band(1.0, 2 * math.pi, 64)

    def test_band_is_one_dimensional(self):
        band = scaled_band(1.0, math.pi, 16)

        assert band.grid.n == 1
        assert np.count_nonzero(band.mask) == 16
