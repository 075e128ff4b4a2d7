"""
Experiment Runner

여러 칸으로 이루어진 실험을 오케스트레이션하는 러너

책임:
1. 해상도 스캔 칸 구성 및 (병렬) 실행
2. (집합, p) 별 추세 통계 집계
3. Poisson / Parseval 항등식 검증
"""

from typing import Optional, Sequence

import numpy as np

from src.core import Settings
from src.core.exceptions import LabError
from src.core.profiles import get_profile_summary
from src.core.logging import get_logger
from src.domain.entities.field import TorusModel
from src.domain.geometry.expression import parse_expression
from src.domain.geometry.rasterizer import rasterize_covering
from src.domain.multiplier.norms import cube_reference_norm
from src.domain.multiplier.scan import ScanCell, ScanCellOutcome, try_scan_cell
from src.domain.sampling.lattice import sample_lattice
from src.domain.spectral.generators import random_bandlimited
from src.domain.spectral.norms import lp_norm, parseval_norm
from src.domain.spectral.transforms import periodize, reflect
from src.evaluation.metrics.trend import trend_statistics
from src.evaluation.schemas import PoissonCheck, ScanReport, ScanRow
from src.infrastructure.scan_executor import ScanExecutor

logger = get_logger(__name__)

POISSON_TOLERANCE = 1e-10


class ExperimentRunner:
    """스캔 / 검증 러너

    칸 실행은 ScanExecutor에 맡기고, 결과 행과 추세 통계를 조립합니다.
    """

    def __init__(self, settings: Settings = None, executor: ScanExecutor = None):
        """
        Args:
            settings: 설정 객체
            executor: 칸 실행기 (None이면 settings.scan.workers 로 생성)
        """
        self._settings = settings or Settings()
        self._executor = executor or ScanExecutor(self._settings)

    def fefferman_scan(
        self,
        expressions: Sequence[str],
        p_list: Sequence[float],
        resolutions: Sequence[int],
        seed: int = 0,
        oversampling: Optional[int] = None,
        profile_id: str = "default",
    ) -> ScanReport:
        """
        (집합, p, M) 격자 전체의 χ_K multiplier norm 스캔

        Args:
            expressions: 집합 표현식 목록
            p_list: 지수 목록
            resolutions: 해상도 목록
            seed: 모든 칸이 공유하는 루트 seed
            oversampling: s (None이면 칸마다 최소 허용값)
            profile_id: 최적화 프로파일

        Returns:
            ScanReport (칸별 행 + (집합, p)별 추세).
            실패한 칸은 estimate 없이 flag 에 오류를 남기고 추세 계산에서 빠집니다.
        """
        cells = [
            ScanCell(expression, float(p), int(M), seed, oversampling, profile_id)
            for expression in expressions
            for p in p_list
            for M in sorted(resolutions)
        ]
        logger.info("[Fefferman] %d sets × %d p × %d M (%s)",
                    len(expressions), len(p_list), len(resolutions), get_profile_summary(profile_id))

        outcomes = self._executor.map(try_scan_cell, cells)
        rows = [_scan_row(outcome) for outcome in outcomes]

        trends = []
        for expression in expressions:
            for p in p_list:
                line = [r for r in rows
                        if r.set_name == expression and r.p == float(p) and r.estimate is not None]
                trends.append(trend_statistics(
                    expression, float(p), [r.M for r in line], [r.estimate for r in line],
                    reference=_reference(expression, float(p)),
                ))
        failed = sum(1 for r in rows if r.estimate is None)
        if failed:
            logger.warning("[Fefferman] %d/%d cells failed", failed, len(rows))
        return ScanReport(rows=rows, trends=trends)

    def poisson_verify(
        self,
        expression: str,
        resolution: int,
        trials: int = 100,
        seed: int = 0,
        oversampling: Optional[int] = None,
    ) -> PoissonCheck:
        """
        무작위 field 에 대해 c(k) = f(−k) 와 Parseval 항등식 검증

        trial i 는 seed + i 로 field 를 생성합니다.
        """
        spec = parse_expression(expression)
        raster = rasterize_covering(spec, resolution, name=expression)
        model = TorusModel.for_raster(raster, oversampling)

        coefficient_error, parseval_error = 0.0, 0.0
        for trial in range(trials):
            field = random_bandlimited(seed + trial, raster, model)
            samples = sample_lattice(field).values
            coefficients = periodize(field).coefficients
            scale = max(float(np.max(np.abs(samples))), np.finfo(float).tiny)
            coefficient_error = max(coefficient_error,
                                    float(np.max(np.abs(coefficients - reflect(samples)))) / scale)
            norm = lp_norm(field, 2)
            parseval_error = max(parseval_error, abs(norm - parseval_norm(field)) / norm)

        check = PoissonCheck(
            set_name=expression,
            M=resolution,
            s=model.oversampling,
            trials=trials,
            seed=seed,
            max_coefficient_error=coefficient_error,
            max_parseval_error=parseval_error,
            passed=coefficient_error <= POISSON_TOLERANCE and parseval_error <= POISSON_TOLERANCE,
        )
        logger.info("[Poisson] %s M=%d trials=%d coefficient_error=%.2e parseval_error=%.2e",
                    expression, resolution, trials, coefficient_error, parseval_error)
        return check


def _scan_row(outcome: ScanCellOutcome) -> ScanRow:
    cell = outcome.cell
    if outcome.failed:
        return ScanRow(
            set_name=cell.expression,
            p=cell.p,
            M=cell.resolution,
            s=cell.oversampling or 0,
            restarts=0,
            flag=f"error: {outcome.error}",
            exit_code=outcome.exit_code,
        )
    estimate = outcome.estimate
    return ScanRow(
        set_name=cell.expression,
        p=cell.p,
        M=estimate.M,
        s=estimate.s,
        estimate=estimate.value,
        restarts=estimate.restarts,
        spread=estimate.spread,
        flag=";".join(estimate.flags),
    )


def _reference(expression: str, p: float) -> Optional[float]:
    try:
        return cube_reference_norm(parse_expression(expression), p)
    except LabError:
        return None
