"""
Random Bandlimited Fields

테스트/실험용 무작위 E_K 원소 생성기. seed가 같으면 같은 field를 돌려줍니다.
"""
from typing import Optional

import numpy as np

from src.core.exceptions import EmptySpectrumError
from src.domain.entities.field import BandlimitedField, TorusModel
from src.domain.entities.grid import RasterizedSet


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """E|z|² = 1 인 복소 표준정규"""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_bandlimited(
    seed: int,
    mask: RasterizedSet,
    model: Optional[TorusModel] = None,
) -> BandlimitedField:
    """
    mask 위 복소 표준정규 계수를 갖는 field

    Args:
        seed: 난수 seed (default_rng에 직접 전달)
        mask: χ_K
        model: TorusModel (기본: mask에 맞는 최소 s)

    Returns:
        BandlimitedField (support = mask)
    """
    if mask.is_empty:
        raise EmptySpectrumError(f"빈 마스크에서는 field를 만들 수 없습니다: {mask.name}")
    model = model or TorusModel.for_raster(mask)
    rng = np.random.default_rng(seed)
    spectrum = np.zeros(model.spectral_shape, dtype=complex)
    spectrum[mask.mask] = complex_normal(rng, int(mask.mask.sum()))
    return BandlimitedField(model, spectrum, support=mask.mask)
