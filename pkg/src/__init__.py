"""
Sampling / Multiplier Lab - Layered Architecture

Layers:
- presentation: CLI (click)
- application: 실험 설정, DI Container
- evaluation: 실험 러너 (equivalence, Fefferman scan, Poisson 검증)
- domain: 수치 로직 (geometry, spectral, sampling, multiplier)
- infrastructure: 결과 파일 기록, 병렬 실행
- core: 공통 설정
"""
from src.application import LabApplication, create_app

__all__ = ["LabApplication", "create_app"]
