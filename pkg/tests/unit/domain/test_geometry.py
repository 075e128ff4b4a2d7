"""
Rasterizer / Tiling Unit Tests

격자 indicator 와 2πℤⁿ 타일링 판정 테스트
"""
import math

import numpy as np
import pytest

from src.core.exceptions import BoxTooSmallError, ConfigError
from src.domain.entities.grid import GridSpec
from src.domain.entities.setspec import Ball, Intersection, Translate, counterexample_k
from src.domain.geometry.expression import parse_expression
from src.domain.geometry.rasterizer import rasterize, rasterize_covering
from src.domain.geometry.tiling import (
    classify_tiling,
    coverage_gap,
    lattice_shifts,
    overlap_measure,
    residue_multiplicity,
    shift_array,
)


class TestGridSpec:
    """GridSpec 테스트"""

    def test_covering_box(self):
        """bounding box를 덮는 최소 셀 박스"""
        grid = GridSpec.covering(Ball((0.0, 0.0), math.pi), 8)

        assert grid.cell_lo == (-1, -1)
        assert grid.cell_hi == (1, 1)
        assert grid.shape == (16, 16)
        assert grid.spacing == pytest.approx(2 * math.pi / 8)

    def test_fold_and_tile(self):
        """fold(tile(v)) = 셀 수 × v"""
        grid = GridSpec(4, (0, -1), (1, 1))
        values = np.arange(16.0).reshape(4, 4)

        assert np.allclose(grid.fold(grid.tile(values)), 2 * values)

    def test_rejects_small_resolution(self):
        """M < 2 거부"""
        with pytest.raises(ConfigError):
            GridSpec(1, (0,), (1,))


class TestRasterize:
    """rasterize 테스트"""

    def test_full_cell_cube(self, cube_raster):
        """[0, 2π]² 는 한 셀 전체"""
        assert cube_raster.mask.all()
        assert cube_raster.measure == pytest.approx(4 * math.pi ** 2)

    def test_ball_measure_converges(self):
        """M=64 에서 측도가 π³ 의 5% 이내"""
        spec = parse_expression("ball(0,0;pi)")
        error = abs(rasterize_covering(spec, 64).measure - math.pi ** 3)

        assert error < 0.05 * math.pi ** 3

    def test_counterexample_keeps_cell_area(self):
        """아래 반원을 더하고 위 반원을 빼므로 넓이 4π²"""
        raster = rasterize_covering(counterexample_k(), 64)

        assert raster.measure == pytest.approx(4 * math.pi ** 2, rel=0.02)

    def test_box_too_small_names_primitive(self):
        """박스 밖으로 나가는 primitive 보고"""
        with pytest.raises(BoxTooSmallError) as info:
            rasterize(Ball((0.0, 0.0), math.pi), GridSpec(8, (0, 0), (1, 1)))
        assert info.value.primitive == "ball(0,0;pi)"

    def test_mask_is_read_only(self, ball_raster):
        """RasterizedSet 은 불변"""
        with pytest.raises(ValueError):
            ball_raster.mask[0, 0] = True


class TestTiling:
    """타일링 판정 테스트"""

    def test_shift_array(self):
        """result[i] = values[i − offset]"""
        values = np.array([1, 2, 3, 4])

        assert shift_array(values, [1]).tolist() == [0, 1, 2, 3]
        assert shift_array(values, [-2]).tolist() == [3, 4, 0, 0]
        assert shift_array(values, [4]).tolist() == [0, 0, 0, 0]

    def test_counterexample_residues_covered_once(self, counterexample_raster):
        """counterexampleK 는 모든 잔여류를 정확히 한 번 덮음"""
        assert np.all(residue_multiplicity(counterexample_raster) == 1)
        assert coverage_gap(counterexample_raster) == 0.0

    def test_counterexample_shifts(self, counterexample_raster):
        """세로로 두 셀이므로 k = (0, ±1) 만 후보"""
        assert sorted(lattice_shifts(counterexample_raster)) == [(0, -1), (0, 1)]
        assert overlap_measure(counterexample_raster, (0, 1)) == 0.0

    def test_overlap_requires_nonzero_shift(self, counterexample_raster):
        """k = 0 거부"""
        with pytest.raises(ConfigError):
            overlap_measure(counterexample_raster, (0, 0))

    def test_big_ball_overlaps(self, big_ball_raster):
        """반지름 2π 원판은 이웃 이동과 겹침"""
        assert overlap_measure(big_ball_raster, (1, 0)) > 1.0
        assert residue_multiplicity(big_ball_raster).max() >= 2

    @pytest.mark.parametrize("expression, verdict", [
        ("cube(0,0;2pi)", "fundamental"),
        ("counterexampleK", "fundamental"),
        ("ball(0,0;pi)", "coverage_violation"),
        ("ball(0,0;2pi)", "overlap_violation"),
        ("ball(0,0;1.5pi)", "overlap_violation"),
    ])
    def test_verdicts(self, expression, verdict):
        """대표 집합의 판정"""
        report = classify_tiling(parse_expression(expression), [8, 16])

        assert report.verdict == verdict
        assert report.resolutions == [8, 16]
        assert len(report.measures) == 2

    def test_lens_overlap_area(self):
        """r = 3π/2 원판과 2πe₁ 이동의 겹침은 렌즈 넓이 2r²acos(d/2r) − (d/2)√(4r² − d²)"""
        M = 64
        raster = rasterize_covering(parse_expression("ball(0,0;1.5pi)"), M)
        r, d = 1.5 * math.pi, 2 * math.pi
        lens = 2 * r ** 2 * math.acos(d / (2 * r)) - (d / 2) * math.sqrt(4 * r ** 2 - d ** 2)

        assert overlap_measure(raster, (1, 0)) == pytest.approx(lens, rel=3 / M)
        assert overlap_measure(raster, (0, 1)) == pytest.approx(lens, rel=3 / M)

    @pytest.mark.parametrize("shift", [(1, 0), (0, 1), (1, 1), (1, -1)])
    def test_overlap_is_symmetric(self, shift):
        """|K ∩ (K + 2πk)| = |K ∩ (K − 2πk)|"""
        raster = rasterize_covering(parse_expression("ball(0,0;1.5pi)"), 16)
        opposite = tuple(-k for k in shift)

        assert overlap_measure(raster, shift) == overlap_measure(raster, opposite)

    @pytest.mark.parametrize("shift", [(1, 0), (1, 1)])
    def test_overlap_matches_intersection_raster(self, shift):
        """이동한 mask 의 교집합 = K ∩ (K + 2πk) 를 같은 격자에 직접 rasterize 한 것"""
        spec = parse_expression("ball(0,0;1.5pi)")
        raster = rasterize_covering(spec, 16)
        moved = Translate(spec, tuple(2 * math.pi * k for k in shift))
        direct = rasterize(Intersection((spec, moved)), raster.grid)

        expected = np.count_nonzero(direct.mask) * raster.grid.cell_volume
        assert overlap_measure(raster, shift) == pytest.approx(expected, abs=2 * raster.grid.cell_volume)
        assert expected > 0

    def test_coverage_gap_value(self):
        """원판 밖 넓이 4π² − π³ (해상도 오차 내)"""
        report = classify_tiling(parse_expression("ball(0,0;pi)"), [32, 64])

        assert report.gap.measures[-1] == pytest.approx(4 * math.pi ** 2 - math.pi ** 3, rel=0.05)
        assert report.gap.status == "positive"

    def test_resolutions_must_increase(self):
        """해상도 수열 검증"""
        with pytest.raises(ConfigError):
            classify_tiling(parse_expression("cube(0,0;2pi)"), [16, 8])
        with pytest.raises(ConfigError):
            classify_tiling(parse_expression("cube(0,0;2pi)"), [16])
