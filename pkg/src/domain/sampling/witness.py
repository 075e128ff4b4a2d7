"""
Aliasing Witness

K 안의 공 B 와 B + 2πk₀ ⊂ K 가 있으면
g(x) = (e^{2πi k₀·x} − 1) f(x), supp f̂ ⊂ B 는 E_K 원소이면서 ℤⁿ 위에서 0입니다.

격자 위 구성:
- O = {ξ ∈ K : ξ + 2πk₀ ∈ K} 의 distance transform 최대점 = 공 중심, 값 = 반지름
- F_f = (1 − |ξ − c|²/d²)² (공 안), F_g(ξ) = F_f(ξ − 2πk₀) − F_f(ξ)
- k₀ 를 주지 않으면 반지름이 최대인 이동을 고름 (동률이면 먼저 나온 이동)
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import ndimage

from src.core.exceptions import ConfigError, NoWitnessError
from src.core.logging import get_logger
from src.domain.entities.field import BandlimitedField, TorusModel
from src.domain.entities.grid import RasterizedSet
from src.domain.geometry.tiling import lattice_shifts, shift_array

logger = get_logger(__name__)


@dataclass(frozen=True)
class WitnessBall:
    """겹침 영역 안의 공 (격자 칸 단위)"""
    shift: Tuple[int, ...]
    center: Tuple[int, ...]
    radius: float

    def frequency_radius(self, spacing: float) -> float:
        return self.radius * spacing


def _overlap_region(raster: RasterizedSet, shift: Sequence[int]) -> np.ndarray:
    offset = [-k * raster.grid.resolution for k in shift]
    return raster.mask & shift_array(raster.mask, offset).astype(bool)


def _largest_ball(region: np.ndarray):
    if not region.any():
        return None
    # 박스 밖은 영역 밖으로 취급
    padded = np.pad(region, 1, constant_values=False)
    distance = ndimage.distance_transform_edt(padded)[tuple(slice(1, -1) for _ in range(region.ndim))]
    flat = int(np.argmax(distance))
    return tuple(int(v) for v in np.unravel_index(flat, region.shape)), float(distance.flat[flat])


def locate_witness_ball(raster: RasterizedSet, shift: Optional[Sequence[int]] = None) -> WitnessBall:
    """
    B ⊂ K, B + 2πk₀ ⊂ K 인 공 탐색

    Raises:
        NoWitnessError: 겹침 영역에 격자점이 없음
    """
    if shift is not None:
        shift = tuple(int(v) for v in shift)
        if len(shift) != raster.grid.n or not any(shift):
            raise ConfigError(f"k₀는 0이 아닌 {raster.grid.n}차원 정수 벡터여야 합니다: {shift}")
        candidates = [shift]
    else:
        candidates = lattice_shifts(raster)

    best: Optional[WitnessBall] = None
    for k in candidates:
        found = _largest_ball(_overlap_region(raster, k))
        if found is None:
            continue
        center, radius = found
        if best is None or radius > best.radius:
            best = WitnessBall(k, center, radius)

    if best is None:
        raise NoWitnessError(
            f"{raster.name}: 격자 이동과의 겹침에 내부가 없어 (overlap 조건 성립) witness가 없습니다"
        )
    return best


def witness_generator(raster: RasterizedSet, ball: WitnessBall, model: Optional[TorusModel] = None) -> BandlimitedField:
    """공 B 위의 bump 스펙트럼을 갖는 생성 field f"""
    model = model or TorusModel.for_raster(raster)
    index = np.indices(raster.grid.shape)
    offset = index - np.asarray(ball.center).reshape((-1,) + (1,) * raster.grid.n)
    ratio = np.sum(offset.astype(float) ** 2, axis=0) / ball.radius ** 2
    spectrum = np.where(ratio < 1, (1 - ratio) ** 2, 0.0).astype(complex)
    return BandlimitedField(model, spectrum, support=raster.mask)


def aliasing_witness(
    raster: RasterizedSet,
    shift: Optional[Sequence[int]] = None,
    model: Optional[TorusModel] = None,
) -> BandlimitedField:
    """
    정수 샘플이 모두 0인 0이 아닌 E_K 원소

    Args:
        raster: χ_K
        shift: k₀ (None이면 탐색)
        model: TorusModel

    Returns:
        g (support ⊂ K)
    """
    model = model or TorusModel.for_raster(raster)
    ball = locate_witness_ball(raster, shift)
    generator = witness_generator(raster, ball, model)
    moved = shift_array(generator.spectrum, [k * raster.grid.resolution for k in ball.shift])
    witness = BandlimitedField(model, moved - generator.spectrum, support=raster.mask)
    logger.info("[Witness] %s k0=%s radius=%.4f (frequency units)",
                raster.name, list(ball.shift), ball.frequency_radius(raster.grid.spacing))
    return witness
