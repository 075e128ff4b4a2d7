"""
L^p / ℓ^p Norms

- lp_norm: ‖f‖_p = (s^{-n} Σ_x |f(x)|^p)^{1/p}, 한 주기(부피 M^n)에 대한 Riemann 합
- lp_norm_samples: ‖a‖_{ℓ^p} = (Σ_k |a(k)|^p)^{1/p}, k ∈ [0, M)^n

p = 1, ∞ 는 지원하지 않습니다 (Shannon 사상이 그 끝점에서 실패).
p = 2 에서 Parseval: ‖f‖_2² = (2π)^{-n} δ^n Σ|F|² = M^{-n} Σ|F|².
"""
import math
from typing import Union as TypingUnion

import numpy as np

from src.core.exceptions import ExponentError
from src.domain.entities.field import BandlimitedField, SampleSequence, TorusModel


def validate_exponent(p: float) -> float:
    """1 < p < ∞ 확인"""
    p = float(p)
    if not (1 < p < math.inf):
        raise ExponentError(f"p는 1 < p < ∞ 범위여야 합니다: p={p}")
    return p


def conjugate_exponent(p: float) -> float:
    """q = p / (p − 1)"""
    p = validate_exponent(p)
    return p / (p - 1)


def weighted_norm(values: np.ndarray, p: float, weight: float = 1.0) -> float:
    """(weight · Σ|v|^p)^{1/p}"""
    magnitude = np.abs(np.asarray(values))
    scale = magnitude.max(initial=0.0)
    if scale == 0:
        return 0.0
    # overflow 방지를 위해 최대값으로 정규화
    return scale * float(weight * np.sum((magnitude / scale) ** p)) ** (1.0 / p)


def lp_norm(
    field: TypingUnion[BandlimitedField, np.ndarray],
    p: float,
    model: TorusModel = None,
    probability: bool = False,
) -> float:
    """
    L^p 노름 (한 주기)

    Args:
        field: BandlimitedField 또는 공간 격자 값
        p: 1 < p < ∞
        model: 배열을 넘길 때 필요
        probability: True면 주기 부피 M^n 으로 나눈 확률측도 기준

    Returns:
        ‖f‖_p
    """
    p = validate_exponent(p)
    if isinstance(field, BandlimitedField):
        model = model or field.model
        values = field.values
    else:
        values = np.asarray(field)
        model.check_values(values)
    weight = model.cell_weight
    if probability:
        weight /= float(model.resolution) ** model.n
    return weighted_norm(values, p, weight)


def lp_norm_samples(sequence: TypingUnion[SampleSequence, np.ndarray], p: float) -> float:
    """ℓ^p 노름 (plain p-sum)"""
    p = validate_exponent(p)
    values = sequence.values if isinstance(sequence, SampleSequence) else np.asarray(sequence)
    return weighted_norm(values, p, 1.0)


def parseval_norm(field: BandlimitedField) -> float:
    """스펙트럼 쪽 L² 노름 (M^{-n} Σ|F|²)^{1/2}"""
    model = field.model
    return float(np.sqrt(np.sum(np.abs(field.spectrum) ** 2) / float(model.resolution) ** model.n))
