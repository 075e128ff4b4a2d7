"""
Logging configuration for Sampling / Multiplier Lab

Cross-cutting concern: 모든 레이어에서 사용하는 로깅 설정

stdout 은 CLI 가 결과 파일 경로를 출력하는 데 쓰므로 로그는 stderr 로 보냅니다.
스캔 worker 프로세스는 configure_worker_logging 으로 부모와 같은 레벨을 씁니다.
"""
import logging
import sys
from typing import Optional, Union

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-30s | %(message)s"
WORKER_FORMAT = "%(asctime)s | %(levelname)-8s | pid=%(process)-6d | %(name)-30s | %(message)s"

# 반복 로그가 많은 외부 모듈
_NOISY_LOGGERS = ("concurrent.futures", "asyncio")


def _resolve_level(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).upper())
    return resolved if isinstance(resolved, int) else logging.INFO


def setup_logging(
    level: Union[int, str] = logging.INFO,
    log_format: Optional[str] = None,
    log_file: Optional[str] = None
) -> None:
    """
    애플리케이션 전역 로깅 설정

    Args:
        level: 로깅 레벨 (int 또는 "DEBUG" 같은 이름, 알 수 없는 이름은 INFO)
        log_format: 로그 포맷 (기본: LOG_FORMAT)
        log_file: 로그 파일 경로 (선택사항, LAB_LOG_FILE)
    """
    level = _resolve_level(level)
    formatter = logging.Formatter(log_format or LOG_FORMAT)

    # 루트 로거 설정
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # 기존 핸들러 제거 (중복 방지)
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    for name in _NOISY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def configure_worker_logging(level: Union[int, str] = logging.INFO) -> None:
    """ProcessPoolExecutor initializer: worker 로그에 pid 표시 (파일 핸들러 없음)"""
    setup_logging(level, log_format=WORKER_FORMAT)


def get_logger(name: str) -> logging.Logger:
    """
    모듈별 로거 획득

    Args:
        name: 로거 이름 (보통 __name__ 사용)

    Example:
        logger = get_logger(__name__)
        logger.info("[Tiling] verdict=%s", report.verdict)
        logger.debug("[PowerMethod] restart=%d ratio=%.6f", r, ratio)
    """
    return logging.getLogger(name)


# 기본 로깅 초기화 (import 시 자동 실행)
setup_logging()
