"""
Lattice Sampling

샘플링 연산 f ↦ (f(k))_{k∈ℤⁿ} 과 샘플로부터의 재구성 F = φG
"""
from typing import Optional

import numpy as np

from src.core.exceptions import GridMismatchError
from src.core.logging import get_logger
from src.domain.entities.field import BandlimitedField, SampleSequence
from src.domain.entities.grid import RasterizedSet
from src.domain.sampling.bump import BumpSpec, build_bump, check_disjoint_translates

logger = get_logger(__name__)


def sample_lattice(field: BandlimitedField) -> SampleSequence:
    """정수 격자점 k ∈ [0, M)^n 의 공간 샘플 (x = k는 공간 격자 j = k·s)"""
    s = field.model.oversampling
    index = tuple(slice(None, None, s) for _ in range(field.model.n))
    return SampleSequence(field.model, field.values[index])


def reconstruct_from_samples(
    samples: SampleSequence,
    mask: RasterizedSet,
    bump: Optional[BumpSpec] = None,
) -> BandlimitedField:
    """
    샘플 → G = fftn(a) → F = φ·G → field

    Args:
        samples: 정수 격자 샘플
        mask: χ_K
        bump: φ 정의 (None이면 φ = χ_K)

    Returns:
        supp φ 에 지지된 BandlimitedField

    Raises:
        DilatedOverlapError: supp φ 의 격자 이동들이 겹침
    """
    model = samples.model
    if mask.grid != model.grid:
        raise GridMismatchError("samples 모델 격자와 mask 격자가 다릅니다")

    phi = build_bump(mask, bump)
    check_disjoint_translates(mask, phi)

    periodic = np.fft.fftn(samples.values)
    spectrum = phi * model.grid.tile(periodic)
    return BandlimitedField(model, spectrum, support=phi > 0)
