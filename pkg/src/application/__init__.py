"""
Application Layer

실험 유스케이스를 정의합니다.
- container: DI Container (명령 → 유스케이스 조립)
- state: 실행 설정 (YAML + CLI 옵션 검증)
"""
from .state import ExperimentConfig, load_config
from .container import LabApplication, RunOutcome, create_app

__all__ = [
    "ExperimentConfig", "load_config",
    "LabApplication", "RunOutcome", "create_app",
]
