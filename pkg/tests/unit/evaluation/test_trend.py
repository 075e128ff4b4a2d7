"""
Trend Metrics Unit Tests
"""
import pytest

from src.evaluation.metrics.trend import (
    classify_trend,
    extrapolated_limit,
    is_flat,
    spearman_correlation,
    trend_statistics,
)


class TestTrendStatistics:
    """해상도 추세 통계 테스트"""

    def test_increasing_line(self):
        stats = trend_statistics("ball(0,0;pi)", 4.0, [8, 16, 32], [1.0, 1.2, 1.5])

        assert stats.spearman == pytest.approx(1.0)
        assert stats.max_min_ratio == pytest.approx(1.5)
        assert stats.strictly_increasing

    def test_flat_line_has_no_correlation(self):
        """값이 모두 같으면 Spearman 은 정의되지 않음"""
        stats = trend_statistics("cube(0,0;2pi)", 2.0, [8, 16, 32], [1.0, 1.0, 1.0])

        assert stats.spearman is None
        assert stats.max_min_ratio == pytest.approx(1.0)
        assert not stats.strictly_increasing

    def test_unsorted_input_is_ordered(self):
        stats = trend_statistics("K", 3.0, [32, 8, 16], [3.0, 1.0, 2.0])

        assert stats.resolutions == [8, 16, 32]
        assert stats.estimates == [1.0, 2.0, 3.0]
        assert stats.strictly_increasing

    def test_decreasing_line(self):
        stats = trend_statistics("K", 3.0, [8, 16, 32], [3.0, 2.0, 1.0])

        assert stats.spearman == pytest.approx(-1.0)
        assert stats.max_min_ratio == pytest.approx(3.0)

    def test_single_point(self):
        stats = trend_statistics("K", 3.0, [8], [1.3])

        assert stats.spearman is None
        assert stats.max_min_ratio == pytest.approx(1.0)
        assert not stats.strictly_increasing


class TestHelpers:
    """is_flat / spearman_correlation 테스트"""

    def test_is_flat(self):
        assert is_flat([2.0, 2.0 + 1e-15])
        assert not is_flat([2.0, 2.1])
        assert is_flat([])

    def test_spearman_needs_two_points(self):
        assert spearman_correlation([8], [1.0]) is None


# M = 8, 16, 32, 64 에서 thorough 프로파일로 얻은 p = 4 추정치
CUBE_P4 = [1.3054, 1.4020, 1.4854, 1.5570]
BALL_P4 = [1.3408, 1.4869, 1.6323, 1.7794]


class TestExtrapolation:
    """Aitken 외삽과 behaviour 분류"""

    def test_geometric_sequence_is_exact(self):
        values = [2.0 - 0.7 * 0.86 ** k for k in range(4)]

        assert extrapolated_limit(values) == pytest.approx(2.0, rel=1e-9)

    def test_needs_shrinking_increments(self):
        assert extrapolated_limit([1.0, 2.0]) is None
        assert extrapolated_limit([1.0, 1.1, 1.3]) is None
        assert extrapolated_limit([1.0, 1.2, 1.1]) is None

    def test_cube_line_converges_below_reference(self):
        """정육면체 p = 4 줄은 평탄하지 않지만 기준값 2 근처로 수렴"""
        stats = trend_statistics("cube(-pi,-pi;2pi)", 4.0, [8, 16, 32, 64], CUBE_P4, reference=2.0)

        assert stats.behaviour == "converging"
        assert stats.extrapolated_limit == pytest.approx(2.0, rel=0.02)
        assert max(stats.estimates) < stats.reference

    def test_ball_line_grows(self):
        """공 p = 4 줄은 증분이 줄지 않음"""
        stats = trend_statistics("ball(0,0;pi)", 4.0, [8, 16, 32, 64], BALL_P4)

        assert stats.behaviour == "growing"
        assert stats.extrapolated_limit is None
        assert stats.spearman == pytest.approx(1.0)

    def test_flat_and_runaway_limit(self):
        assert classify_trend([1.0, 1.0, 1.0], None) == "flat"
        assert classify_trend([1.0, 1.5, 1.99], extrapolated_limit([1.0, 1.5, 1.99])) == "growing"
        assert classify_trend([1.3], None) == "inconclusive"
