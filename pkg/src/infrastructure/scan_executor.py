"""
Scan Executor

Infrastructure Layer: 독립적인 스캔 칸을 프로세스 풀에서 실행
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from src.core import Settings
from src.core.logging import configure_worker_logging, get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ScanExecutor:
    """칸 단위 작업 큐

    workers가 1이면 현재 프로세스에서 순서대로 실행합니다.
    결과는 항상 입력 순서와 같으므로 seed 스케줄이 같으면 결과도 같습니다.
    """

    def __init__(self, settings: Settings = None, workers: int = None):
        self.settings = settings or Settings()
        self.workers = max(1, workers if workers is not None else self.settings.scan.workers)

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """fn은 pickle 가능한 top-level 함수여야 합니다 (workers > 1)"""
        items = list(items)
        if self.workers == 1 or len(items) <= 1:
            logger.info("[Scan] %d cells (serial)", len(items))
            return [fn(item) for item in items]

        logger.info("[Scan] %d cells on %d workers", len(items), self.workers)
        level = logging.getLogger().getEffectiveLevel()
        with ProcessPoolExecutor(
            max_workers=self.workers, initializer=configure_worker_logging, initargs=(level,),
        ) as pool:
            return list(pool.map(fn, items))
