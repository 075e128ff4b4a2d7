"""
SetSpec Entity

주파수 공간의 compact 집합 K ⊂ ℝⁿ를 primitive와 결합자의 트리로 표현합니다.

- Primitive: Cube, Ball (HalfSpaceGraph는 예약만 되어 있음)
- Combinator: Translate, Union, Intersection, Difference
- Named: 이름 붙은 집합 (counterexampleK)

모든 노드는 불변(frozen)이고 point membership은 벡터화되어 있습니다.
경계 처리: closed=True면 경계 포함. Difference는 빼는 집합의 열린 내부만 제거합니다.
"""
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from src.core.exceptions import ConfigError

Box = Tuple[np.ndarray, np.ndarray]
LeafBox = Tuple[str, np.ndarray, np.ndarray]


def format_number(value: float) -> str:
    """π/4의 배수는 '3pi/2' 형태로, 나머지는 repr로 출력"""
    ratio = Fraction(value / math.pi).limit_denominator(4)
    if abs(float(ratio) * math.pi - value) < 1e-12:
        if ratio == 0:
            return "0"
        num, den = ratio.numerator, ratio.denominator
        coeff = "" if abs(num) == 1 else str(abs(num))
        text = f"{'-' if num < 0 else ''}{coeff}pi"
        return text if den == 1 else f"{text}/{den}"
    return repr(float(value))


def _vector(values, name: str) -> Tuple[float, ...]:
    vec = tuple(float(v) for v in np.atleast_1d(values))
    if not vec or not all(math.isfinite(v) for v in vec):
        raise ConfigError(f"{name}는 유한한 좌표여야 합니다: {values}")
    return vec


class SetSpec(ABC):
    """집합 표현 트리의 공통 인터페이스"""

    @property
    @abstractmethod
    def dim(self) -> int:
        """공간 차원 n"""

    @abstractmethod
    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        """points[..., n] 각각의 membership (bool 배열)"""

    @abstractmethod
    def bbox(self) -> Box:
        """해석적 bounding box (lo, hi)"""

    @abstractmethod
    def boundary_length(self) -> float:
        """경계 측도의 상한 (n=2에서는 둘레)"""

    @abstractmethod
    def to_expression(self) -> str:
        """텍스트 표현식 (parse_expression의 역)"""

    @abstractmethod
    def leaf_boxes(self) -> List[LeafBox]:
        """양(+)의 primitive들의 (표현식, lo, hi) 목록

        Difference의 빼는 쪽은 집합을 넓히지 않으므로 제외합니다.
        """

    def diameter(self) -> float:
        """bounding box 대각선 길이 (직경의 상한)"""
        lo, hi = self.bbox()
        return float(np.linalg.norm(np.maximum(hi - lo, 0.0)))

    def __str__(self) -> str:
        return self.to_expression()


# =============================================================================
# Primitives
# =============================================================================

@dataclass(frozen=True)
class Cube(SetSpec):
    """중심 center, 한 변 side인 닫힌 정육면체"""
    center: Tuple[float, ...]
    side: float

    def __post_init__(self):
        object.__setattr__(self, "center", _vector(self.center, "center"))
        if not self.side > 0:
            raise ConfigError(f"cube side는 양수여야 합니다: {self.side}")
        object.__setattr__(self, "side", float(self.side))

    @property
    def dim(self) -> int:
        return len(self.center)

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        offset = np.abs(points - np.asarray(self.center))
        half = self.side / 2
        inside = offset <= half if closed else offset < half
        return np.all(inside, axis=-1)

    def bbox(self) -> Box:
        c = np.asarray(self.center)
        return c - self.side / 2, c + self.side / 2

    def boundary_length(self) -> float:
        n = self.dim
        return 2 * n * self.side ** (n - 1)

    def to_expression(self) -> str:
        corner = ",".join(format_number(c - self.side / 2) for c in self.center)
        return f"cube({corner};{format_number(self.side)})"

    def leaf_boxes(self) -> List[LeafBox]:
        lo, hi = self.bbox()
        return [(self.to_expression(), lo, hi)]


@dataclass(frozen=True)
class Ball(SetSpec):
    """중심 center, 반지름 radius인 닫힌 공"""
    center: Tuple[float, ...]
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _vector(self.center, "center"))
        if not self.radius > 0:
            raise ConfigError(f"ball radius는 양수여야 합니다: {self.radius}")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self) -> int:
        return len(self.center)

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        sq = np.sum((points - np.asarray(self.center)) ** 2, axis=-1)
        r2 = self.radius ** 2
        return sq <= r2 if closed else sq < r2

    def bbox(self) -> Box:
        c = np.asarray(self.center)
        return c - self.radius, c + self.radius

    def boundary_length(self) -> float:
        n = self.dim
        unit_volume = math.pi ** (n / 2) / math.gamma(n / 2 + 1)
        return n * unit_volume * self.radius ** (n - 1)

    def to_expression(self) -> str:
        center = ",".join(format_number(c) for c in self.center)
        return f"ball({center};{format_number(self.radius)})"

    def leaf_boxes(self) -> List[LeafBox]:
        lo, hi = self.bbox()
        return [(self.to_expression(), lo, hi)]


@dataclass(frozen=True)
class HalfSpaceGraph(SetSpec):
    """연속 함수 그래프 아래 영역 (예약: 구성하지 않음)"""
    dimension: int = 2

    def __post_init__(self):
        raise NotImplementedError("HalfSpaceGraph는 예약된 primitive입니다 (local chart 미지원)")

    @property
    def dim(self) -> int:  # pragma: no cover
        return self.dimension

    def contains(self, points, closed=True):  # pragma: no cover
        raise NotImplementedError

    def bbox(self):  # pragma: no cover
        raise NotImplementedError

    def boundary_length(self):  # pragma: no cover
        raise NotImplementedError

    def to_expression(self):  # pragma: no cover
        raise NotImplementedError

    def leaf_boxes(self):  # pragma: no cover
        raise NotImplementedError


# =============================================================================
# Combinators
# =============================================================================

@dataclass(frozen=True)
class Translate(SetSpec):
    """inner + v"""
    inner: SetSpec
    offset: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "offset", _vector(self.offset, "offset"))
        if len(self.offset) != self.inner.dim:
            raise ConfigError(f"translate 벡터 차원 불일치: {self.offset}")

    @property
    def dim(self) -> int:
        return self.inner.dim

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        return self.inner.contains(points - np.asarray(self.offset), closed)

    def bbox(self) -> Box:
        lo, hi = self.inner.bbox()
        v = np.asarray(self.offset)
        return lo + v, hi + v

    def boundary_length(self) -> float:
        return self.inner.boundary_length()

    def to_expression(self) -> str:
        vec = ",".join(format_number(v) for v in self.offset)
        return f"translate({self.inner.to_expression()};{vec})"

    def leaf_boxes(self) -> List[LeafBox]:
        v = np.asarray(self.offset)
        return [
            (f"translate({label};{','.join(format_number(x) for x in self.offset)})", lo + v, hi + v)
            for label, lo, hi in self.inner.leaf_boxes()
        ]


def _check_same_dim(parts: Tuple[SetSpec, ...], kind: str) -> None:
    if len(parts) < 1:
        raise ConfigError(f"{kind}에는 최소 1개의 집합이 필요합니다")
    dims = {part.dim for part in parts}
    if len(dims) != 1:
        raise ConfigError(f"{kind}의 집합 차원이 서로 다릅니다: {sorted(dims)}")


@dataclass(frozen=True)
class Union(SetSpec):
    parts: Tuple[SetSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        _check_same_dim(self.parts, "union")

    @property
    def dim(self) -> int:
        return self.parts[0].dim

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        result = self.parts[0].contains(points, closed)
        for part in self.parts[1:]:
            result = result | part.contains(points, closed)
        return result

    def bbox(self) -> Box:
        boxes = [part.bbox() for part in self.parts]
        return np.min([b[0] for b in boxes], axis=0), np.max([b[1] for b in boxes], axis=0)

    def boundary_length(self) -> float:
        return sum(part.boundary_length() for part in self.parts)

    def to_expression(self) -> str:
        return f"union({','.join(part.to_expression() for part in self.parts)})"

    def leaf_boxes(self) -> List[LeafBox]:
        return [leaf for part in self.parts for leaf in part.leaf_boxes()]


@dataclass(frozen=True)
class Intersection(SetSpec):
    parts: Tuple[SetSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        _check_same_dim(self.parts, "inter")

    @property
    def dim(self) -> int:
        return self.parts[0].dim

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        result = self.parts[0].contains(points, closed)
        for part in self.parts[1:]:
            result = result & part.contains(points, closed)
        return result

    def bbox(self) -> Box:
        boxes = [part.bbox() for part in self.parts]
        return np.max([b[0] for b in boxes], axis=0), np.min([b[1] for b in boxes], axis=0)

    def boundary_length(self) -> float:
        return sum(part.boundary_length() for part in self.parts)

    def to_expression(self) -> str:
        return f"inter({','.join(part.to_expression() for part in self.parts)})"

    def leaf_boxes(self) -> List[LeafBox]:
        # 교집합은 어느 한 부분의 박스 안에 있으면 충분
        lo, hi = self.bbox()
        return [(self.to_expression(), lo, hi)]


@dataclass(frozen=True)
class Difference(SetSpec):
    """minuend \\ interior(subtrahend)"""
    minuend: SetSpec
    subtrahend: SetSpec

    def __post_init__(self):
        _check_same_dim((self.minuend, self.subtrahend), "diff")

    @property
    def dim(self) -> int:
        return self.minuend.dim

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        return self.minuend.contains(points, closed) & ~self.subtrahend.contains(points, not closed)

    def bbox(self) -> Box:
        return self.minuend.bbox()

    def boundary_length(self) -> float:
        return self.minuend.boundary_length() + self.subtrahend.boundary_length()

    def to_expression(self) -> str:
        return f"diff({self.minuend.to_expression()},{self.subtrahend.to_expression()})"

    def leaf_boxes(self) -> List[LeafBox]:
        return self.minuend.leaf_boxes()


@dataclass(frozen=True)
class Named(SetSpec):
    """이름이 붙은 집합. 표현식으로는 이름만 출력합니다."""
    name: str
    body: SetSpec

    @property
    def dim(self) -> int:
        return self.body.dim

    def contains(self, points: np.ndarray, closed: bool = True) -> np.ndarray:
        return self.body.contains(points, closed)

    def bbox(self) -> Box:
        return self.body.bbox()

    def boundary_length(self) -> float:
        return self.body.boundary_length()

    def to_expression(self) -> str:
        return self.name

    def leaf_boxes(self) -> List[LeafBox]:
        return self.body.leaf_boxes()


def counterexample_k() -> Named:
    """([0,2π]² ∪ Ball((π,0),π)) \\ Ball((π,2π),π)

    2πℤ² 의 fundamental domain이지만 p ≠ 2에서 ℤ² 샘플링이 안정적이지 않은 집합.
    아래 반원을 더하고 위 반원을 빼므로 넓이는 4π² 그대로입니다.
    """
    pi = math.pi
    body = Difference(
        Union((Cube((pi, pi), 2 * pi), Ball((pi, 0.0), pi))),
        Ball((pi, 2 * pi), pi),
    )
    return Named("counterexampleK", body)
