"""
Experiment Runner Unit Tests

Poisson 검증과 작은 Fefferman 스캔
"""
import pytest

from src.evaluation.runner import ExperimentRunner
from src.infrastructure.scan_executor import ScanExecutor


@pytest.fixture
def runner(settings):
    return ExperimentRunner(settings, ScanExecutor(settings, workers=1))


class TestPoissonVerify:
    """c(k) = f(−k), Parseval 검증"""

    def test_cube_passes(self, runner):
        check = runner.poisson_verify("cube(0,0;2pi)", 8, trials=3, seed=5)

        assert check.passed
        assert check.trials == 3
        assert check.seed == 5
        assert check.max_coefficient_error < 1e-10
        assert check.max_parseval_error < 1e-10

    def test_counterexample_passes(self, runner):
        check = runner.poisson_verify("counterexampleK", 8, trials=2)

        assert check.passed
        assert check.s == 5


class TestFeffermanScan:
    """해상도 스캔 테스트"""

    def test_rows_and_trends(self, runner):
        report = runner.fefferman_scan(["cube(0,0;2pi)"], [2.0], [16, 8], seed=1, profile_id="fast")

        assert [row.M for row in report.rows] == [8, 16]
        assert all(row.estimate == pytest.approx(1.0, rel=1e-9) for row in report.rows)
        assert len(report.trends) == 1
        assert report.trends[0].resolutions == [8, 16]
        assert report.trends[0].spearman is None

    def test_one_trend_per_set_and_exponent(self, runner):
        report = runner.fefferman_scan(["cube(0,0;2pi)", "ball(0,0;pi)"], [2.0, 3.0], [8], profile_id="fast")

        assert len(report.rows) == 4
        assert {(t.set_name, t.p) for t in report.trends} == {
            ("cube(0,0;2pi)", 2.0), ("cube(0,0;2pi)", 3.0),
            ("ball(0,0;pi)", 2.0), ("ball(0,0;pi)", 3.0),
        }

    def test_failed_cell_does_not_abort_scan(self, runner):
        """quadrature 하한 미만 s 로 실패한 칸은 행에 기록되고 나머지는 계산됨"""
        report = runner.fefferman_scan(["cube(0,0;2pi)", "ball(0,0;pi)"], [2.0], [8],
                                       oversampling=3, profile_id="fast")

        cube, ball = report.rows
        assert cube.estimate is None
        assert cube.exit_code == 2
        assert cube.flag.startswith("error: ConfigError")
        assert ball.estimate == pytest.approx(1.0, rel=1e-9)
        assert ball.exit_code == 0
        assert report.trends[0].resolutions == []
        assert report.trends[1].resolutions == [8]

    def test_unparsable_set_is_recorded(self, runner):
        report = runner.fefferman_scan(["disk(0,0;pi)", "cube(0,0;2pi)"], [2.0], [8], profile_id="fast")

        assert report.rows[0].estimate is None
        assert report.rows[1].estimate == pytest.approx(1.0, rel=1e-9)

    def test_cube_trend_carries_reference(self, runner):
        """정육면체 줄에는 (1/sin(π/p))^n 기준값, 공 줄에는 없음"""
        report = runner.fefferman_scan(["cube(0,0;2pi)", "ball(0,0;pi)"], [4.0], [8], profile_id="fast")

        cube, ball = report.trends
        assert cube.reference == pytest.approx(2.0, rel=1e-12)
        assert ball.reference is None
        assert report.rows[0].estimate <= cube.reference
