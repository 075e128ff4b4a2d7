"""
MultiplierSpec Entity

스펙트럼 격자 위의 유계 함수 m(ξ). indicator(χ_K) 또는 임의의 격자 함수입니다.
"""
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import ConfigError
from src.domain.entities.grid import GridSpec, RasterizedSet


@dataclass(frozen=True, eq=False)
class MultiplierSpec:
    """Fourier multiplier 심볼

    Attributes:
        grid: 스펙트럼 격자 (박스 밖에서는 m = 0)
        values: m 값 (grid.shape, 실수 또는 복소수)
        name: 표시 이름
        indicator: χ_K 여부
    """
    grid: GridSpec
    values: np.ndarray
    name: str = "m"
    indicator: bool = False

    def __post_init__(self):
        values = np.array(self.values)
        if values.shape != self.grid.shape:
            raise ConfigError(f"multiplier shape {values.shape} != grid shape {self.grid.shape}")
        if not np.all(np.isfinite(values)):
            raise ConfigError("multiplier 값은 유한해야 합니다")
        if self.indicator and not np.all(np.isin(values, (0, 1))):
            raise ConfigError("indicator multiplier는 0/1 값만 가집니다")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_raster(cls, raster: RasterizedSet) -> "MultiplierSpec":
        return cls(raster.grid, raster.mask.astype(float), name=raster.name, indicator=True)

    @property
    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.values) or bool(np.all(np.imag(self.values) == 0))

    def adjoint(self) -> "MultiplierSpec":
        """conj(m): 가중 내적에 대한 adjoint multiplier"""
        return MultiplierSpec(self.grid, np.conj(self.values), f"conj({self.name})", self.indicator)
