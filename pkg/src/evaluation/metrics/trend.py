"""
Trend Metrics

해상도 스캔 추정치의 단조성 통계

메트릭 설명:
- Spearman: M 과 추정치의 순위 상관 (1.0 이면 완전 단조 증가)
- max/min ratio: 해상도 간 변동 폭 (평탄한 줄은 1 근처)
- strictly increasing: 인접 해상도 사이 엄격한 증가
- extrapolated limit: 마지막 세 값의 Aitken Δ² 외삽 (증분이 줄어들 때만)
- behaviour: flat / converging / growing / inconclusive

M 을 두 배씩 늘리는 스캔을 가정합니다. 유계인 multiplier 도 이산 추정치는 아래에서
올라가므로 "증가"만으로는 무계를 뜻하지 않습니다. 증분이 기하급수적으로 줄고 외삽값이
유한하면 converging 으로 분류합니다.
"""

from typing import Optional, Sequence

import numpy as np
from scipy.stats import spearmanr

from src.evaluation.schemas import TrendStatistics

FLAT_TOLERANCE = 1e-12
FLAT_RATIO = 1.1
# 외삽값이 마지막 추정치의 이 배수를 넘으면 수렴으로 보지 않음
CONVERGENCE_CAP = 2.0


def is_flat(estimates: Sequence[float]) -> bool:
    """모든 값이 (상대) 같은지"""
    values = np.asarray(estimates, dtype=float)
    if values.size == 0:
        return True
    scale = max(float(np.max(np.abs(values))), 1.0)
    return float(np.ptp(values)) <= FLAT_TOLERANCE * scale


def spearman_correlation(resolutions: Sequence[int], estimates: Sequence[float]):
    """
    Spearman 순위 상관

    값이 모두 같거나 점이 2개 미만이면 상관이 정의되지 않으므로 None
    """
    if len(estimates) < 2 or is_flat(estimates):
        return None
    statistic = spearmanr(resolutions, estimates)[0]
    return None if np.isnan(statistic) else float(statistic)


def extrapolated_limit(estimates: Sequence[float]) -> Optional[float]:
    """
    마지막 세 값 x₀, x₁, x₂ 의 Aitken Δ² 극한 x₂ − Δ₂² / (Δ₂ − Δ₁)

    두 증분이 같은 부호이고 |Δ₂| < |Δ₁| 일 때만 정의합니다 (그 외 None).
    """
    if len(estimates) < 3:
        return None
    x0, x1, x2 = (float(v) for v in estimates[-3:])
    first, second = x1 - x0, x2 - x1
    if first * second <= 0 or abs(second) >= abs(first):
        return None
    return x2 - second ** 2 / (second - first)


def classify_trend(values: Sequence[float], limit: Optional[float]) -> str:
    """정렬된 추정치 한 줄의 behaviour"""
    if len(values) < 2:
        return "inconclusive"
    low, high = min(values), max(values)
    if low > 0 and high / low <= FLAT_RATIO:
        return "flat"
    increasing = all(b > a for a, b in zip(values, values[1:]))
    if limit is not None and increasing and limit <= CONVERGENCE_CAP * values[-1]:
        return "converging"
    if increasing:
        return "growing"
    return "inconclusive"


def trend_statistics(
    set_name: str,
    p: float,
    resolutions: Sequence[int],
    estimates: Sequence[float],
    reference: Optional[float] = None,
) -> TrendStatistics:
    """
    추세 통계 계산

    Args:
        set_name: 집합 표현식
        p: 지수
        resolutions: 해상도 (순서 무관, 내부에서 정렬)
        estimates: 해상도별 추정치
        reference: 알려진 연속체 기준값 (정육면체 등, 없으면 None)

    Returns:
        TrendStatistics
    """
    order = np.argsort(resolutions)
    M = [int(resolutions[i]) for i in order]
    values = [float(estimates[i]) for i in order]
    low = min(values) if values else 0.0
    ratio = max(values) / low if low > 0 else float("inf") if values else 0.0
    limit = extrapolated_limit(values)

    return TrendStatistics(
        set_name=set_name,
        p=p,
        resolutions=M,
        estimates=values,
        spearman=spearman_correlation(M, values),
        max_min_ratio=ratio,
        strictly_increasing=len(values) >= 2 and all(b > a for a, b in zip(values, values[1:])),
        extrapolated_limit=limit,
        reference=reference,
        behaviour=classify_trend(values, limit),
    )
