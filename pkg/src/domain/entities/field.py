"""
Field Entities

이산 토러스 모델 위의 대역 제한 함수와 그 부속 데이터

- TorusModel: 이산화 계약 (스펙트럼 격자 + 공간 oversampling s)
- BandlimitedField: E_K^p 원소 (스펙트럼 F, 공간 샘플 f는 lazy)
- PeriodicSpectrum: 2πℤⁿ 주기화 G와 계수열 c(k)
- SampleSequence: 정수 격자 샘플 f(k), k ∈ [0, M)ⁿ

Fourier 규약: F(ξ) = ∫ f(x) e^{-ix·ξ} dx, f(x) = (2π)^{-n} ∫ F(ξ) e^{ix·ξ} dξ
격자 Riemann 합으로 f(x) = M^{-n} Σ_ξ F(ξ) e^{ix·ξ}.
"""
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from src.core.exceptions import ConfigError, GridMismatchError
from src.domain.entities.grid import GridSpec, RasterizedSet

TWO_PI = 2 * math.pi


def _frozen_array(values, dtype=complex) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TorusModel:
    """이산화 계약

    Attributes:
        grid: 스펙트럼 격자 (간격 2π/M, 공간 주기 M)
        oversampling: s (공간 격자 간격 1/s, 축별 N = M·s 점)
    """
    grid: GridSpec
    oversampling: int

    def __post_init__(self):
        s = int(self.oversampling)
        object.__setattr__(self, "oversampling", s)
        if self.grid.resolution < 4:
            raise ConfigError(f"TorusModel은 M >= 4가 필요합니다: M={self.grid.resolution}")
        if s < max(self.grid.cells):
            raise ConfigError(
                f"oversampling s={s}가 박스 셀 수 {self.grid.cells}보다 작아 주파수가 겹칩니다"
            )

    @staticmethod
    def quadrature_threshold(diameter: float) -> int:
        """p=2 quadrature가 정확해지는 최소 s"""
        return 2 * math.ceil(diameter / TWO_PI - 1e-12) + 1

    @classmethod
    def for_raster(cls, raster: RasterizedSet, oversampling: Optional[int] = None) -> "TorusModel":
        """raster에 맞는 모델. s를 주지 않으면 최소 허용값을 사용합니다."""
        minimum = max(cls.quadrature_threshold(raster.diameter()), max(raster.grid.cells))
        if oversampling is None:
            return cls(raster.grid, minimum)
        if oversampling < cls.quadrature_threshold(raster.diameter()):
            raise ConfigError(
                f"oversampling s={oversampling} < quadrature 하한 "
                f"{cls.quadrature_threshold(raster.diameter())} (diameter={raster.diameter():.4f})"
            )
        return cls(raster.grid, oversampling)

    def refined(self) -> "TorusModel":
        """s를 두 배로 한 모델 (quadrature 오차 추정용)"""
        return TorusModel(self.grid, 2 * self.oversampling)

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def resolution(self) -> int:
        return self.grid.resolution

    @property
    def spectral_shape(self) -> Tuple[int, ...]:
        return self.grid.shape

    @property
    def fine_shape(self) -> Tuple[int, ...]:
        return (self.resolution * self.oversampling,) * self.n

    @property
    def lattice_shape(self) -> Tuple[int, ...]:
        return (self.resolution,) * self.n

    @property
    def cell_weight(self) -> float:
        """공간 격자점 하나의 부피 (1/s)^n"""
        return float(self.oversampling) ** (-self.n)

    @cached_property
    def phase(self) -> np.ndarray:
        """exp(i x·o), o = 박스 원점 주파수"""
        axes = [
            np.exp(1j * (np.arange(self.fine_shape[j]) / self.oversampling) * self.grid.origin[j])
            for j in range(self.n)
        ]
        result = axes[0]
        for axis in axes[1:]:
            result = np.multiply.outer(result, axis)
        return _frozen_array(result)

    def check_spectrum(self, spectrum: np.ndarray) -> None:
        if spectrum.shape != self.spectral_shape:
            raise GridMismatchError(
                f"spectrum shape {spectrum.shape} != model spectral shape {self.spectral_shape}"
            )

    def check_values(self, values: np.ndarray) -> None:
        if values.shape != self.fine_shape:
            raise GridMismatchError(f"values shape {values.shape} != model fine shape {self.fine_shape}")

    def check_lattice(self, values: np.ndarray) -> None:
        if values.shape != self.lattice_shape:
            raise GridMismatchError(
                f"lattice shape {values.shape} != model lattice shape {self.lattice_shape}"
            )

    def describe(self) -> dict:
        return {**self.grid.describe(), "s": self.oversampling, "n": self.n}


@dataclass(frozen=True, eq=False)
class BandlimitedField:
    """E_K^p 원소

    Attributes:
        model: TorusModel
        spectrum: 박스 격자 위의 복소 계수 F
        support: F가 0이 아닐 수 있는 위치 (None이면 제한 없음)
    """
    model: TorusModel
    spectrum: np.ndarray
    support: Optional[np.ndarray] = field(default=None)

    def __post_init__(self):
        spectrum = _frozen_array(self.spectrum)
        self.model.check_spectrum(spectrum)
        object.__setattr__(self, "spectrum", spectrum)
        if self.support is not None:
            support = _frozen_array(self.support, dtype=bool)
            self.model.check_spectrum(support)
            if np.any(spectrum[~support] != 0):
                raise ConfigError("spectrum이 support 밖에서 0이 아닙니다")
            object.__setattr__(self, "support", support)

    @cached_property
    def values(self) -> np.ndarray:
        """공간 격자 위의 f (inverse transform)"""
        from src.domain.spectral.transforms import inverse_transform
        return _frozen_array(inverse_transform(self.spectrum, self.model))

    def on_model(self, model: TorusModel) -> "BandlimitedField":
        """같은 스펙트럼을 다른 s의 모델에서 재평가"""
        if model.grid != self.model.grid:
            raise GridMismatchError("스펙트럼 격자가 다른 모델로는 옮길 수 없습니다")
        return BandlimitedField(model, self.spectrum, self.support)


@dataclass(frozen=True, eq=False)
class PeriodicSpectrum:
    """주기화 G (한 2π-셀 위 M^n 값)

    잔여류 r ↔ 주파수 δ·r (mod 2π). c(k) = fftn(G)/M^n = f(−k).
    """
    model: TorusModel
    values: np.ndarray

    def __post_init__(self):
        values = _frozen_array(self.values)
        self.model.check_lattice(values)
        object.__setattr__(self, "values", values)

    @cached_property
    def coefficients(self) -> np.ndarray:
        """c(k), k ∈ [0, M)^n"""
        return _frozen_array(np.fft.fftn(self.values) / self.values.size)


@dataclass(frozen=True, eq=False)
class SampleSequence:
    """정수 격자 샘플 a(k) = f(k), k ∈ [0, M)^n"""
    model: TorusModel
    values: np.ndarray

    def __post_init__(self):
        values = _frozen_array(self.values)
        self.model.check_lattice(values)
        object.__setattr__(self, "values", values)
