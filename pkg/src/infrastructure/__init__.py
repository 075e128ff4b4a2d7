"""
Infrastructure Layer

외부 시스템(파일 시스템, 프로세스)과의 연결을 담당합니다.
- ArtifactWriter: CSV / JSON / field snapshot 기록
- ScanExecutor: 스캔 칸 병렬 실행
"""
from .artifact_writer import (
    ARTIFACT_VERSION,
    ArtifactWriter,
    read_embedded_config,
    read_field_binary,
    read_field_csv,
)
from .scan_executor import ScanExecutor

__all__ = [
    "ARTIFACT_VERSION",
    "ArtifactWriter",
    "read_embedded_config",
    "read_field_binary",
    "read_field_csv",
    "ScanExecutor",
]
