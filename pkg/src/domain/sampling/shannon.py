"""
Shannon 1D Baseline

supp f̂ ⊂ [−ω, ω], 0 < h ≤ π/ω 이면 f ↦ √h·f(kh) 는 L² → ℓ² 등거리입니다.

g(y) = f(hy) 로 축척하면 supp ĝ ⊂ [−ωh, ωh] ⊂ [−π, π] 이고
f(kh) = g(k), ‖f‖₂ = √h‖g‖₂ 이므로 정수 격자 문제로 환원됩니다.
"""
import math
from typing import Optional

import numpy as np

from src.core.exceptions import ConfigError, GridMismatchError, SubNyquistError
from src.core.logging import get_logger
from src.domain.entities.field import BandlimitedField, TorusModel
from src.domain.entities.grid import GridSpec, RasterizedSet
from src.domain.entities.models import ShannonReport
from src.domain.entities.setspec import Ball
from src.domain.geometry.rasterizer import rasterize
from src.domain.sampling.lattice import reconstruct_from_samples, sample_lattice
from src.domain.sampling.witness import aliasing_witness
from src.domain.spectral.generators import random_bandlimited
from src.domain.spectral.norms import lp_norm, lp_norm_samples

logger = get_logger(__name__)

NYQUIST_SLACK = 1e-12


def scaled_band(omega: float, h: float, resolution: int) -> RasterizedSet:
    """축척한 대역 [−ωh, ωh] 의 1차원 mask"""
    if not omega > 0 or not h > 0:
        raise ConfigError(f"ω, h는 양수여야 합니다: ω={omega}, h={h}")
    radius = omega * h
    if radius >= 2 * math.pi:
        raise ConfigError(f"ωh={radius:.4f} 는 2π 보다 작아야 합니다")
    grid = GridSpec(resolution, (-1,), (1,))
    return rasterize(Ball((0.0,), radius), grid, name=f"band(omega={omega:g},h={h:g})")


def shannon_1d(
    omega: float,
    h: float,
    resolution: int = 64,
    seed: int = 0,
    field: Optional[BandlimitedField] = None,
) -> ShannonReport:
    """
    대역 제한 f 에 대한 등거리 / 재구성 검사

    f 는 축척한 형태 g(y) = f(hy) 로 다룹니다. field 를 주면 그 g 를 검사하고,
    없으면 seed 로 축척 대역 위의 무작위 g 를 만듭니다.

    Args:
        omega: 대역 ω
        h: 샘플 간격 (≤ π/ω)
        resolution: 스펙트럼 해상도 M
        seed: field 가 없을 때의 seed
        field: scaled_band(omega, h, resolution) 격자 위의 g (선택)

    Raises:
        SubNyquistError: h > π/ω
        GridMismatchError: field 격자가 축척 대역 격자와 다름
        ConfigError: field 스펙트럼이 [−ωh, ωh] 밖에 값을 가짐
    """
    nyquist = math.pi / omega if omega > 0 else math.inf
    if h > nyquist * (1 + NYQUIST_SLACK):
        raise SubNyquistError(
            f"h={h:.6g} > π/ω={nyquist:.6g}: 샘플 간격이 Nyquist 간격보다 커서 등거리가 성립하지 않습니다"
        )

    band = scaled_band(omega, h, resolution)
    if field is None:
        field = random_bandlimited(seed, band)
    elif field.model.grid != band.grid:
        raise GridMismatchError(f"field 격자가 축척 대역 격자와 다릅니다: {field.model.grid.describe()}")
    elif np.any(field.spectrum[~band.mask] != 0):
        raise ConfigError("field 스펙트럼이 [−ωh, ωh] 밖에 값을 가집니다")
    samples = sample_lattice(field)

    scale = math.sqrt(h)
    field_norm = scale * lp_norm(field, 2)
    sample_norm = scale * lp_norm_samples(samples, 2)

    rebuilt = reconstruct_from_samples(samples, band)
    peak = float(np.max(np.abs(field.values)))
    reconstruction_error = float(np.max(np.abs(rebuilt.values - field.values))) / peak if peak else 0.0

    report = ShannonReport(
        omega=omega, h=h, M=resolution, seed=seed,
        field_norm=field_norm,
        sample_norm=sample_norm,
        isometry_error=abs(sample_norm - field_norm) / field_norm,
        reconstruction_error=reconstruction_error,
    )
    logger.info("[Shannon] ω=%g h=%g ‖f‖=%.10f ‖√h·samples‖=%.10f",
                omega, h, report.field_norm, report.sample_norm)
    return report


def shannon_aliasing_witness(omega: float, h: float, resolution: int = 64) -> BandlimitedField:
    """h > π/ω 일 때 정수 샘플이 모두 0인 축척 대역의 0 아닌 field

    Raises:
        NoWitnessError: [−ωh, ωh] 와 그 2π 이동의 겹침에 격자 내부가 없음
    """
    band = scaled_band(omega, h, resolution)
    return aliasing_witness(band, shift=(1,), model=TorusModel.for_raster(band))
