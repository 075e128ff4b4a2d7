"""
Configuration settings for Sampling / Multiplier Lab

Cross-cutting concern: 모든 레이어에서 사용하는 설정값
"""
import os
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class OptimizerSettings:
    """Power Method (p-norm 최대화) 기본 설정"""
    restarts: int = 8
    max_iterations: int = 500
    tolerance: float = 1e-8  # patience 구간 동안의 상대 개선량 하한
    patience: int = 10
    probes: int = 0


@dataclass
class GeometrySettings:
    """타일링 판정 설정"""
    tolerance_factor: float = 10.0  # 경계 길이 대비 허용 배수
    slope_threshold: float = -0.5  # log-log 기울기가 이보다 작으면 "→0"으로 판정


@dataclass
class SpectralSettings:
    """이산화 설정"""
    min_resolution: int = 4


@dataclass
class ScanSettings:
    """해상도 스캔 실행 설정"""
    workers: int = 1  # 1이면 직렬 실행


@dataclass
class OutputSettings:
    """결과 파일 / 로깅 설정"""
    output_dir: str = "results"
    log_level: str = "INFO"
    log_file: Optional[str] = None


@dataclass
class Settings:
    """전체 설정 관리 (Cross-Cutting Concern)"""
    optimizer: OptimizerSettings = field(default_factory=OptimizerSettings)
    geometry: GeometrySettings = field(default_factory=GeometrySettings)
    spectral: SpectralSettings = field(default_factory=SpectralSettings)
    scan: ScanSettings = field(default_factory=ScanSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    def __post_init__(self):
        # 환경변수 오버라이드 - Output
        if os.getenv("LAB_OUTPUT_DIR"):
            self.output.output_dir = os.getenv("LAB_OUTPUT_DIR")
        if os.getenv("LAB_LOG_LEVEL"):
            self.output.log_level = os.getenv("LAB_LOG_LEVEL").upper()
        if os.getenv("LAB_LOG_FILE"):
            self.output.log_file = os.getenv("LAB_LOG_FILE")

        # 환경변수 오버라이드 - Scan
        if os.getenv("LAB_WORKERS"):
            self.scan.workers = int(os.getenv("LAB_WORKERS"))

        # 환경변수 오버라이드 - Optimizer
        if os.getenv("LAB_RESTARTS"):
            self.optimizer.restarts = int(os.getenv("LAB_RESTARTS"))
        if os.getenv("LAB_MAX_ITERATIONS"):
            self.optimizer.max_iterations = int(os.getenv("LAB_MAX_ITERATIONS"))


settings = Settings()
