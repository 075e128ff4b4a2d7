"""
Grid Entities

스펙트럼 격자(GridSpec)와 격자 위의 집합 indicator(RasterizedSet)

격자 규약:
- 간격 δ = 2π/M, 박스는 2π-셀 단위 [2π·lo, 2π·hi)
- 점 i는 하단 코너 주파수 ξ_i = 2π·lo + δ·i 로 표기하고 셀 [ξ_i, ξ_i + δ)를 대표
- membership은 셀 중심 ξ_i + δ/2 에서 판정
"""
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from src.core.exceptions import ConfigError
from src.domain.entities.setspec import SetSpec

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class GridSpec:
    """스펙트럼 격자 정의

    Attributes:
        resolution: M (2π 당 축별 격자점 수)
        cell_lo: 박스 하단 (2π-셀 단위 정수)
        cell_hi: 박스 상단 (2π-셀 단위 정수, 미포함)
    """
    resolution: int
    cell_lo: Tuple[int, ...]
    cell_hi: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cell_lo", tuple(int(v) for v in self.cell_lo))
        object.__setattr__(self, "cell_hi", tuple(int(v) for v in self.cell_hi))
        if int(self.resolution) < 2:
            raise ConfigError(f"resolution M은 2 이상이어야 합니다: {self.resolution}")
        object.__setattr__(self, "resolution", int(self.resolution))
        if len(self.cell_lo) != len(self.cell_hi) or not self.cell_lo:
            raise ConfigError("cell_lo / cell_hi 차원 불일치")
        if any(hi <= lo for lo, hi in zip(self.cell_lo, self.cell_hi)):
            raise ConfigError(f"빈 박스: lo={self.cell_lo}, hi={self.cell_hi}")

    @classmethod
    def covering(cls, spec: SetSpec, resolution: int, pad: int = 0) -> "GridSpec":
        """spec의 bounding box를 덮는 최소 셀 박스 (+ pad 셀)"""
        lo, hi = spec.bbox()
        cell_lo = [math.floor(v / TWO_PI + 1e-12) - pad for v in lo]
        cell_hi = [math.ceil(v / TWO_PI - 1e-12) + pad for v in hi]
        cell_hi = [max(h, l + 1) for l, h in zip(cell_lo, cell_hi)]
        return cls(resolution, tuple(cell_lo), tuple(cell_hi))

    def with_resolution(self, resolution: int) -> "GridSpec":
        return GridSpec(resolution, self.cell_lo, self.cell_hi)

    @property
    def n(self) -> int:
        return len(self.cell_lo)

    @property
    def spacing(self) -> float:
        return TWO_PI / self.resolution

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.n

    @property
    def cells(self) -> Tuple[int, ...]:
        return tuple(hi - lo for lo, hi in zip(self.cell_lo, self.cell_hi))

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.resolution * c for c in self.cells)

    @property
    def origin(self) -> np.ndarray:
        return TWO_PI * np.asarray(self.cell_lo, dtype=float)

    @property
    def extent(self) -> Tuple[np.ndarray, np.ndarray]:
        """박스의 주파수 좌표 범위"""
        return self.origin, TWO_PI * np.asarray(self.cell_hi, dtype=float)

    def axis_labels(self, axis: int) -> np.ndarray:
        """축 방향 하단 코너 주파수"""
        return self.origin[axis] + self.spacing * np.arange(self.shape[axis])

    def centers(self) -> np.ndarray:
        """셀 중심 좌표 (*shape, n)"""
        axes = [self.axis_labels(j) + self.spacing / 2 for j in range(self.n)]
        return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)

    def covers(self, lo: np.ndarray, hi: np.ndarray, tol: float = 1e-9) -> bool:
        box_lo, box_hi = self.extent
        if np.any(np.asarray(hi) < np.asarray(lo)):
            return True  # 빈 집합
        return bool(np.all(lo >= box_lo - tol) and np.all(hi <= box_hi + tol))

    def fold(self, values: np.ndarray) -> np.ndarray:
        """박스 배열을 한 셀로 접기 (셀들에 대한 합, 결과 shape (M,)*n)"""
        interleaved = []
        for cells in self.cells:
            interleaved.extend((cells, self.resolution))
        reshaped = np.asarray(values).reshape(interleaved)
        return reshaped.sum(axis=tuple(range(0, 2 * self.n, 2)))

    def tile(self, values: np.ndarray) -> np.ndarray:
        """한 셀 배열을 박스 전체로 주기 확장"""
        return np.tile(np.asarray(values), self.cells)

    def describe(self) -> dict:
        return {"M": self.resolution, "cell_lo": list(self.cell_lo), "cell_hi": list(self.cell_hi)}


@dataclass(frozen=True, eq=False)
class RasterizedSet:
    """격자 위의 χ_K

    Attributes:
        grid: 격자
        mask: bool 배열 (grid.shape)
        spec: 원본 SetSpec (테스트/보고용, 없을 수 있음)
        name: 표시 이름
    """
    grid: GridSpec
    mask: np.ndarray
    spec: Optional[SetSpec] = field(default=None, compare=False)
    name: str = ""

    def __post_init__(self):
        mask = np.array(self.mask, dtype=bool)
        if mask.shape != self.grid.shape:
            raise ConfigError(f"mask shape {mask.shape} != grid shape {self.grid.shape}")
        mask.setflags(write=False)
        object.__setattr__(self, "mask", mask)
        if not self.name and self.spec is not None:
            object.__setattr__(self, "name", self.spec.to_expression())

    @cached_property
    def measure(self) -> float:
        """셀 개수 × 셀 부피 (주파수 부피 단위)"""
        return float(np.count_nonzero(self.mask)) * self.grid.cell_volume

    @property
    def is_empty(self) -> bool:
        return not self.mask.any()

    def diameter(self) -> float:
        """spec이 있으면 해석적 직경 상한, 없으면 마스크 점들의 범위"""
        if self.spec is not None:
            return self.spec.diameter()
        idx = np.argwhere(self.mask)
        if idx.size == 0:
            return 0.0
        span = (idx.max(axis=0) - idx.min(axis=0) + 1) * self.grid.spacing
        return float(np.linalg.norm(span))
