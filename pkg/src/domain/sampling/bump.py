"""
Bump Functions

K 위에서 1이고 K + B(0, ε) 안에 지지되는 격자 함수 φ

구성:
1. ρ_total = ⌊ε / (δ√n)⌋ 격자 칸 (box 이웃 ρ칸의 유클리드 반경 ≤ ρδ√n ≤ ε)
2. D = mask를 ρ₁ = ρ_total // 2 칸 dilation
3. φ = (2h+1) 폭 box average를 order번 반복 적용한 χ_D, h = ρ₁ // order
   → mask 위에서 정확히 1, 지지집합은 mask의 2ρ₁ 칸 dilation 안
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import ndimage

from src.core.exceptions import BoxTooSmallError, ConfigError, DilatedOverlapError
from src.core.logging import get_logger
from src.domain.entities.grid import RasterizedSet
from src.domain.geometry.tiling import residue_multiplicity

logger = get_logger(__name__)


@dataclass(frozen=True)
class BumpSpec:
    """φ 정의 (margin ε, 평활 차수 order)"""
    epsilon: float
    order: int = 2

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ConfigError(f"bump margin ε는 양수여야 합니다: {self.epsilon}")
        if self.order < 1:
            raise ConfigError(f"bump order는 1 이상이어야 합니다: {self.order}")

    def radii(self, spacing: float, n: int):
        """(ρ₁, h) 격자 칸 수"""
        total = math.floor(self.epsilon / (spacing * math.sqrt(n)) + 1e-12)
        dilation = total // 2
        return dilation, dilation // self.order


def build_bump(raster: RasterizedSet, bump: Optional[BumpSpec] = None) -> np.ndarray:
    """
    φ 격자 값 (0 ≤ φ ≤ 1, mask 위에서 1)

    Args:
        raster: χ_K
        bump: None이면 φ = χ_K

    Raises:
        BoxTooSmallError: dilation이 박스 가장자리에 닿음
    """
    mask = raster.mask
    if bump is None:
        return mask.astype(float)

    grid = raster.grid
    dilation, half_width = bump.radii(grid.spacing, grid.n)
    structure = np.ones((3,) * grid.n, dtype=bool)
    region = ndimage.binary_dilation(mask, structure=structure, iterations=dilation) if dilation else mask.copy()

    phi = region.astype(float)
    if half_width > 0:
        for _ in range(bump.order):
            phi = ndimage.uniform_filter(phi, size=2 * half_width + 1, mode="constant", cval=0.0)
    phi = np.clip(phi, 0.0, 1.0)
    phi[mask] = 1.0
    phi[phi < 1e-15] = 0.0

    if dilation and _touches_edge(phi > 0):
        raise BoxTooSmallError(
            raster.name,
            f"bump 지지집합이 격자 박스 가장자리에 닿습니다 (ε={bump.epsilon}); 박스를 넓혀야 합니다",
        )
    logger.debug("[Bump] %s ε=%g order=%d dilation=%d half_width=%d",
                 raster.name, bump.epsilon, bump.order, dilation, half_width)
    return phi


def _touches_edge(support: np.ndarray) -> bool:
    for axis in range(support.ndim):
        if support.take(0, axis=axis).any() or support.take(-1, axis=axis).any():
            return True
    return False


def check_disjoint_translates(raster: RasterizedSet, phi: np.ndarray) -> None:
    """supp φ 의 2πℤⁿ 이동들이 서로 겹치지 않는지 확인

    Raises:
        DilatedOverlapError: 어떤 잔여류를 두 번 이상 덮음
    """
    support = RasterizedSet(raster.grid, phi > 0, name=raster.name)
    multiplicity = residue_multiplicity(support)
    if multiplicity.max(initial=0) > 1:
        overlap = float(np.count_nonzero(multiplicity > 1)) * raster.grid.cell_volume
        raise DilatedOverlapError(
            f"{raster.name}: bump 지지집합의 격자 이동들이 겹칩니다 (측도 {overlap:.4g}). "
            "재구성 F = φG 는 이동들이 서로소일 때만 성립합니다"
        )
