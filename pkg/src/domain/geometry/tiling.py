"""
Lattice Tiling Checks

2πℤⁿ 격자 이동에 대한 겹침 |K ∩ (K + 2πk)| 과 덮임 gap을 격자 위에서 계산하고,
해상도 수열에 대한 수렴률로 fundamental domain 여부를 판정합니다.

판정 규칙:
- 측도 m(M)이 "0"이려면 m(M) ≤ c/M 형태로 줄어야 하고 c ≤ (배수 × 해석적 경계 길이)
- 양수 값이 2개 이상이면 log m vs log M 기울기로 감소 여부를 판단
- 감소하지만 상수가 너무 크면 inconclusive (거짓 인증서를 내지 않음)
"""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.config import GeometrySettings
from src.core.exceptions import ConfigError
from src.core.logging import get_logger
from src.domain.entities.grid import RasterizedSet
from src.domain.entities.models import ShiftCertificate, TilingReport
from src.domain.entities.setspec import SetSpec
from src.domain.geometry.rasterizer import rasterize_covering

logger = get_logger(__name__)

Shift = Tuple[int, ...]


def shift_array(values: np.ndarray, offset: Sequence[int]) -> np.ndarray:
    """result[i] = values[i - offset], 박스 밖은 0으로 채움"""
    values = np.asarray(values)
    result = np.zeros_like(values)
    src, dst = [], []
    for size, off in zip(values.shape, offset):
        if abs(off) >= size:
            return result
        if off >= 0:
            src.append(slice(0, size - off))
            dst.append(slice(off, size))
        else:
            src.append(slice(-off, size))
            dst.append(slice(0, size + off))
    result[tuple(dst)] = values[tuple(src)]
    return result


def lattice_shifts(raster: RasterizedSet) -> List[Shift]:
    """교집합이 비어 있지 않을 수 있는 k ≠ 0 목록

    |k_j| < 박스 셀 수, |2πk| ≤ diameter(K) 인 이동만 고려합니다.
    """
    grid = raster.grid
    diameter = raster.diameter()
    ranges = [range(-(c - 1), c) for c in grid.cells]
    shifts = []
    for k in itertools.product(*ranges):
        if not any(k):
            continue
        if 2 * np.pi * np.linalg.norm(k) <= diameter + 1e-9:
            shifts.append(tuple(int(v) for v in k))
    return shifts


def overlap_measure(raster: RasterizedSet, shift: Sequence[int]) -> float:
    """
    |K ∩ (K + 2πk)| 의 격자 측도

    2πk는 정확히 k·M 격자 칸이므로 mask 이동은 정확합니다.

    Args:
        raster: χ_K
        shift: k ∈ ℤⁿ, k ≠ 0

    Returns:
        겹침 셀 수 × 셀 부피
    """
    shift = tuple(int(v) for v in shift)
    if len(shift) != raster.grid.n:
        raise ConfigError(f"shift 차원 불일치: {shift}")
    if not any(shift):
        raise ConfigError("overlap_measure에는 k ≠ 0이 필요합니다")
    moved = shift_array(raster.mask, [k * raster.grid.resolution for k in shift])
    return float(np.count_nonzero(raster.mask & moved)) * raster.grid.cell_volume


def residue_multiplicity(raster: RasterizedSet) -> np.ndarray:
    """잔여류별로 K의 격자 이동이 몇 번 덮는지 (shape (M,)*n)"""
    return raster.grid.fold(raster.mask.astype(np.int64))


def coverage_gap(raster: RasterizedSet) -> float:
    """한 기본 셀 중 ∪ₖ(K + 2πk)에 덮이지 않는 측도"""
    multiplicity = residue_multiplicity(raster)
    return float(np.count_nonzero(multiplicity == 0)) * raster.grid.cell_volume


def _certify(
    measures: Sequence[float],
    resolutions: Sequence[int],
    bound: float,
    slope_threshold: float,
    shift: Optional[Shift] = None,
) -> ShiftCertificate:
    """측도 수열 하나에 대한 0 / 양수 / inconclusive 판정"""
    m = np.asarray(measures, dtype=float)
    M = np.asarray(resolutions, dtype=float)
    rate_constant = float(np.max(m * M))
    positive = m > 0

    slope = None
    if np.count_nonzero(positive) >= 2:
        slope = float(np.polyfit(np.log(M[positive]), np.log(m[positive]), 1)[0])

    if not positive.any():
        status = "zero"
    elif slope is None:
        status = "zero" if rate_constant <= bound else "positive"
    elif slope >= slope_threshold:
        status = "positive"
    elif rate_constant <= bound:
        status = "zero"
    else:
        status = "inconclusive"

    return ShiftCertificate(
        shift=list(shift) if shift is not None else None,
        measures=[float(v) for v in m],
        rate_constant=rate_constant,
        slope=slope,
        status=status,
    )


def classify_tiling(
    spec: SetSpec,
    resolutions: Sequence[int],
    settings: Optional[GeometrySettings] = None,
    name: Optional[str] = None,
) -> TilingReport:
    """
    fundamental domain 판정

    Args:
        spec: 집합
        resolutions: 증가하는 해상도 수열 (길이 ≥ 2)
        settings: 허용 배수 / 기울기 기준
        name: 보고서에 쓸 이름

    Returns:
        TilingReport (verdict ∈ fundamental, overlap_violation, coverage_violation, both, inconclusive)
    """
    settings = settings or GeometrySettings()
    resolutions = [int(M) for M in resolutions]
    if len(resolutions) < 2 or any(b <= a for a, b in zip(resolutions, resolutions[1:])):
        raise ConfigError(f"해상도 수열은 길이 2 이상의 증가 수열이어야 합니다: {resolutions}")

    overlap_series: Dict[Shift, List[float]] = {}
    gaps, measures = [], []
    shifts: List[Shift] = []
    for i, M in enumerate(resolutions):
        raster = rasterize_covering(spec, M)
        if i == 0:
            shifts = lattice_shifts(raster)
            overlap_series = {k: [] for k in shifts}
        for k in shifts:
            overlap_series[k].append(overlap_measure(raster, k))
        gaps.append(coverage_gap(raster))
        measures.append(raster.measure)

    bound = settings.tolerance_factor * spec.boundary_length()
    overlaps = [
        _certify(overlap_series[k], resolutions, bound, settings.slope_threshold, shift=k)
        for k in shifts
    ]
    gap = _certify(gaps, resolutions, bound, settings.slope_threshold)

    overlap_bad = any(c.status == "positive" for c in overlaps)
    gap_bad = gap.status == "positive"
    unsure = gap.status == "inconclusive" or any(c.status == "inconclusive" for c in overlaps)
    if overlap_bad and gap_bad:
        verdict = "both"
    elif overlap_bad:
        verdict = "overlap_violation"
    elif gap_bad:
        verdict = "coverage_violation"
    elif unsure:
        verdict = "inconclusive"
    else:
        verdict = "fundamental"

    report = TilingReport(
        set_name=name or spec.to_expression(),
        resolutions=resolutions,
        measures=measures,
        overlaps=overlaps,
        gap=gap,
        boundary_bound=bound,
        verdict=verdict,
    )
    log = logger.warning if verdict == "inconclusive" else logger.info
    log("[Tiling] %s M=%s verdict=%s max_overlap=%.4g gap=%.4g",
        report.set_name, resolutions, verdict, report.max_overlap, gaps[-1])
    return report
