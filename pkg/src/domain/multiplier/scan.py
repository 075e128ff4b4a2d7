"""
Fefferman Scan Cells

(집합, p, M) 한 칸의 χ_K multiplier norm. 칸마다 상태가 독립이라 프로세스 풀에서 실행할 수 있습니다.
한 칸의 LabError 는 그 칸의 결과로 기록하고 나머지 칸은 계속 실행합니다.
"""
from dataclasses import dataclass
from typing import Optional

from src.core.exceptions import LabError
from src.core.logging import get_logger
from src.core.profiles import get_profile
from src.domain.entities.field import TorusModel
from src.domain.entities.models import ConstantEstimate
from src.domain.entities.multiplier import MultiplierSpec
from src.domain.geometry.expression import parse_expression
from src.domain.geometry.rasterizer import rasterize_covering
from src.domain.multiplier.norms import estimate_multiplier_norm
from src.domain.optimization.power_method import PowerMethodOptimizer

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScanCell:
    """스캔 한 칸 (pickle 가능한 원시 값만 보관)"""
    expression: str
    p: float
    resolution: int
    seed: int = 0
    oversampling: Optional[int] = None
    profile_id: str = "default"


@dataclass(frozen=True)
class ScanCellOutcome:
    """칸 실행 결과 (성공이면 estimate, 실패이면 error + exit_code)"""
    cell: ScanCell
    estimate: Optional[ConstantEstimate] = None
    error: str = ""
    exit_code: int = 0

    @property
    def failed(self) -> bool:
        return self.estimate is None


def run_scan_cell(cell: ScanCell) -> ConstantEstimate:
    """칸 하나 실행 (set 파싱부터 다시 하므로 worker 프로세스에서 독립적으로 동작)"""
    spec = parse_expression(cell.expression)
    raster = rasterize_covering(spec, cell.resolution, name=cell.expression)
    model = TorusModel.for_raster(raster, cell.oversampling)
    optimizer = PowerMethodOptimizer(get_profile(cell.profile_id))
    return estimate_multiplier_norm(MultiplierSpec.from_raster(raster), cell.p, model, optimizer, cell.seed)


def try_scan_cell(cell: ScanCell) -> ScanCellOutcome:
    """run_scan_cell + LabError 를 결과로 변환"""
    try:
        return ScanCellOutcome(cell, estimate=run_scan_cell(cell))
    except LabError as e:
        logger.warning("[Scan] %s p=%g M=%d 실패: %s", cell.expression, cell.p, cell.resolution, e)
        return ScanCellOutcome(cell, error=f"{type(e).__name__}: {e}", exit_code=e.exit_code)
