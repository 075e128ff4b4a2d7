"""
Rasterizer

SetSpec → RasterizedSet. 셀 중심점에서 primitive 트리의 해석적 membership을 평가합니다.
"""
from typing import Optional

from src.core.exceptions import BoxTooSmallError
from src.core.logging import get_logger
from src.domain.entities.grid import GridSpec, RasterizedSet
from src.domain.entities.setspec import SetSpec

logger = get_logger(__name__)


def check_box(spec: SetSpec, grid: GridSpec) -> None:
    """격자 박스가 모든 양(+)의 primitive를 덮는지 확인

    Raises:
        BoxTooSmallError: 덮지 못하는 첫 primitive 이름 포함
    """
    if spec.dim != grid.n:
        raise BoxTooSmallError(spec.to_expression(), f"차원 불일치: set n={spec.dim}, grid n={grid.n}")
    box_lo, box_hi = grid.extent
    for label, lo, hi in spec.leaf_boxes():
        if not grid.covers(lo, hi):
            raise BoxTooSmallError(
                label,
                f"격자 박스 [{list(box_lo)}, {list(box_hi)}]가 primitive {label} "
                f"(bbox {list(lo)} .. {list(hi)})를 덮지 못합니다",
            )


def rasterize(spec: SetSpec, grid: GridSpec, name: Optional[str] = None) -> RasterizedSet:
    """
    집합을 스펙트럼 격자 위 indicator로 변환

    Args:
        spec: 집합 트리
        grid: 격자 (박스가 spec의 bounding box를 덮어야 함)
        name: 표시 이름 (기본: spec 표현식)

    Returns:
        RasterizedSet (mask[p] = 셀 p 중심의 membership)
    """
    check_box(spec, grid)
    mask = spec.contains(grid.centers(), closed=True)
    raster = RasterizedSet(grid, mask, spec=spec, name=name or spec.to_expression())
    logger.debug("[Rasterize] %s M=%d points=%d measure=%.6f",
                 raster.name, grid.resolution, int(mask.sum()), raster.measure)
    return raster


def rasterize_covering(spec: SetSpec, resolution: int, pad: int = 0, name: Optional[str] = None) -> RasterizedSet:
    """bounding box를 덮는 최소 격자에서 rasterize"""
    return rasterize(spec, GridSpec.covering(spec, resolution, pad=pad), name=name)
