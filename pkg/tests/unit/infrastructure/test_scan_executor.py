"""
Scan Executor Unit Tests
"""
import math

from src.infrastructure.scan_executor import ScanExecutor


class TestScanExecutor:
    """직렬 / 프로세스 풀 실행 테스트"""

    def test_serial_keeps_order(self, settings):
        executor = ScanExecutor(settings, workers=1)

        assert executor.map(abs, [-3, 1, -2]) == [3, 1, 2]

    def test_workers_from_settings(self, settings):
        settings.scan.workers = 3

        assert ScanExecutor(settings).workers == 3

    def test_worker_count_floor(self, settings):
        assert ScanExecutor(settings, workers=0).workers == 1

    def test_process_pool_keeps_order(self, settings):
        executor = ScanExecutor(settings, workers=2)

        assert executor.map(math.sqrt, [9.0, 1.0, 4.0]) == [3.0, 1.0, 2.0]
