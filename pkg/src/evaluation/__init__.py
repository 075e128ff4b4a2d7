"""
Evaluation Module

여러 칸으로 이루어진 수치 실험을 실행하고 집계하는 모듈입니다.

Components:
- metrics/trend.py: 해상도 추세 통계 (Spearman, max/min ratio)
- runner.py: Fefferman 스캔, Poisson 검증 오케스트레이션
- schemas.py: 스캔 / 검증 결과 스키마
"""

from .schemas import ScanRow, ScanReport, TrendStatistics, PoissonCheck
from .runner import ExperimentRunner

__all__ = [
    "ScanRow",
    "ScanReport",
    "TrendStatistics",
    "PoissonCheck",
    "ExperimentRunner",
]
