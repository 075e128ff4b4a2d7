"""
Multiplier Norms

- estimate_multiplier_norm: ‖F ↦ mF‖_{𝓕L^p → 𝓕L^p} (공간 격자 토러스 위)
- estimate_periodized_multiplier_norm: ‖G ↦ χ_K G‖_{𝓕ℓ^p → 𝓕L^p}
- multiplier_duality_check: p 와 q 양쪽 추정치 비교 (교차 warm start)
"""
from typing import Optional, Sequence

import numpy as np

from src.core.logging import get_logger
from src.domain.entities.field import TorusModel
from src.domain.entities.grid import RasterizedSet
from src.domain.entities.models import ConstantEstimate, DualityReport
from src.domain.entities.multiplier import MultiplierSpec
from src.domain.entities.setspec import Cube, Named, SetSpec, Translate
from src.domain.geometry.tiling import residue_multiplicity
from src.domain.multiplier.operators import (
    fine_multiplier_operator,
    periodized_multiplier_operator,
    reflect_flat,
)
from src.domain.optimization.power_method import PowerMethodOptimizer, dual_map
from src.domain.sampling.constants import EstimateOutcome, quadrature_error
from src.domain.spectral.norms import conjugate_exponent, validate_exponent
from src.domain.spectral.transforms import inverse_transform

logger = get_logger(__name__)

DUALITY_TOLERANCE = 0.05
DUALITY_ROUNDS = 3


def default_model(m: MultiplierSpec) -> TorusModel:
    """격자 박스 대각선 기준 최소 oversampling 모델"""
    lo, hi = m.grid.extent
    diagonal = float(np.linalg.norm(hi - lo))
    return TorusModel(m.grid, max(TorusModel.quadrature_threshold(diagonal), max(m.grid.cells)))


def _peak_start(m: MultiplierSpec, model: TorusModel) -> np.ndarray:
    """|m| 최대 주파수의 순수 지수함수"""
    spike = np.zeros(model.spectral_shape, dtype=complex)
    spike[np.unravel_index(int(np.argmax(np.abs(m.values))), spike.shape)] = 1.0
    return inverse_transform(spike, model).ravel()


def multiplier_norm(
    m: MultiplierSpec,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    warm_starts: Sequence[np.ndarray] = (),
    restarts: Optional[int] = None,
) -> EstimateOutcome:
    """‖m‖_{p→p} 추정 (최적 입력 포함)"""
    p = validate_exponent(p)
    model = model or default_model(m)
    optimizer = optimizer or PowerMethodOptimizer()
    operator = fine_multiplier_operator(m, model)

    result = optimizer.maximize(
        operator, p,
        seed=seed,
        input_weight=model.cell_weight,
        output_weight=model.cell_weight,
        warm_starts=[_peak_start(m, model), *warm_starts],
        restarts=restarts,
        label=f"multiplier {m.name}",
    )
    estimate = result.to_estimate("multiplier", p, model.resolution, model.oversampling,
                                  seed=seed, set_name=m.name)
    logger.info("[Multiplier] %s p=%g M=%d ‖m‖ ≥ %.6f", m.name, p, model.resolution, estimate.value)
    return EstimateOutcome(estimate, result.best_vector, operator)


def estimate_multiplier_norm(
    m: MultiplierSpec,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
) -> ConstantEstimate:
    """
    F ↦ mF 의 𝓕L^p norm lower bound

    p = 2 에서는 |m| 최대 주파수의 지수함수 warm start 가 정확한 값 max|m| 을 냅니다.
    """
    return multiplier_norm(m, p, model, optimizer, seed).estimate


def half_line_projection_norm(p: float) -> float:
    """반직선 Fourier 사영 χ_[0,∞) 의 L^p norm 1/sin(π/p) (p 와 q 에서 같음)"""
    p = validate_exponent(p)
    return 1.0 / float(np.sin(np.pi / p))


def cube_reference_norm(spec: SetSpec, p: float) -> Optional[float]:
    """
    축에 평행한 정육면체 χ_cube 의 연속체 기준값 (1/sin(π/p))^n

    정육면체 multiplier 는 구간 multiplier 들의 텐서곱이고 각 구간 norm 은 반직선 사영 norm 과
    비교됩니다. 이산 추정치는 M 이 커지면서 이 값 아래에서 올라갑니다 (구간당 주파수가 M 개뿐).
    정육면체(또는 그 평행 이동)가 아니면 None.
    """
    while isinstance(spec, (Translate, Named)):
        spec = spec.inner if isinstance(spec, Translate) else spec.body
    if not isinstance(spec, Cube):
        return None
    return half_line_projection_norm(p) ** spec.dim


def _coefficient_projection(raster: RasterizedSet, model: TorusModel):
    covered = residue_multiplicity(raster) > 0
    if covered.all():
        return None
    shape = model.lattice_shape

    def project(c):
        c = np.asarray(c).reshape(shape)
        return np.fft.fftn(np.where(covered, np.fft.ifftn(c), 0)).ravel()

    return project


def periodized_multiplier_norm(
    raster: RasterizedSet,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    warm_starts: Sequence[np.ndarray] = (),
) -> EstimateOutcome:
    """‖G ↦ χ_K G‖_{𝓕ℓ^p → 𝓕L^p} 추정

    무작위 시작점은 샘플링 추정과 같은 seed 에서 c₀ = a₀(−k) 로 만들어
    두 경로의 반복이 같은 수열을 따르도록 합니다.
    """
    p = validate_exponent(p)
    model = model or TorusModel.for_raster(raster)
    optimizer = optimizer or PowerMethodOptimizer()
    operator = periodized_multiplier_operator(raster, model)

    result = optimizer.maximize(
        operator, p,
        seed=seed,
        input_weight=1.0,
        output_weight=model.cell_weight,
        project=_coefficient_projection(raster, model),
        start_map=lambda x: reflect_flat(x, model),
        warm_starts=warm_starts,
        label=f"periodized multiplier {raster.name}",
    )
    samples = reflect_flat(result.best_vector, model).reshape(model.lattice_shape)
    estimate = result.to_estimate(
        "periodized_multiplier", p, model.resolution, model.oversampling,
        seed=seed, set_name=raster.name,
        quadrature_error=quadrature_error(raster, model, samples, p),
    )
    logger.info("[Multiplier] %s p=%g M=%d N_mult ≥ %.6f", raster.name, p, model.resolution, estimate.value)
    return EstimateOutcome(estimate, result.best_vector, operator)


def estimate_periodized_multiplier_norm(
    raster: RasterizedSet,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
) -> ConstantEstimate:
    return periodized_multiplier_norm(raster, p, model, optimizer, seed).estimate


def multiplier_duality_check(
    m: MultiplierSpec,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    tolerance: float = DUALITY_TOLERANCE,
) -> DualityReport:
    """
    ‖m‖_{p→p} 와 ‖m̄‖_{q→q} 비교

    한쪽 최적 입력 x 에 대해 g = A x |A x|^{r-2} 는 반대쪽에서 같은 ratio 이상을 내므로
    (Hölder 등호), 양쪽을 서로의 쌍대 벡터로 warm start 하며 최대 DUALITY_ROUNDS 회 반복합니다.
    """
    p = validate_exponent(p)
    q = conjugate_exponent(p)
    model = model or default_model(m)
    optimizer = optimizer or PowerMethodOptimizer()
    adjoint = m.adjoint()

    side_p = multiplier_norm(m, p, model, optimizer, seed)
    side_q = multiplier_norm(adjoint, q, model, optimizer, seed,
                             warm_starts=[dual_map(side_p.operator.matvec(side_p.vector), p)])
    rounds = 1
    while _gap(side_p.estimate.value, side_q.estimate.value) > tolerance and rounds < DUALITY_ROUNDS:
        rounds += 1
        side_p = _best(side_p, multiplier_norm(
            m, p, model, optimizer, seed, restarts=0,
            warm_starts=[dual_map(side_q.operator.matvec(side_q.vector), q)],
        ))
        side_q = _best(side_q, multiplier_norm(
            adjoint, q, model, optimizer, seed, restarts=0,
            warm_starts=[dual_map(side_p.operator.matvec(side_p.vector), p)],
        ))

    value_p, value_q = side_p.estimate.value, side_q.estimate.value
    gap = _gap(value_p, value_q)
    spread = side_p.estimate.spread + side_q.estimate.spread
    report = DualityReport(
        set_name=m.name, p=p, q=q,
        value_p=value_p, value_q=value_q,
        relative_gap=gap, spread=spread, rounds=rounds,
        agree=gap <= max(tolerance, spread),
    )
    logger.info("[Duality] %s p=%g q=%g values=(%.6f, %.6f) gap=%.3e rounds=%d",
                m.name, p, q, value_p, value_q, gap, rounds)
    return report


def _gap(a: float, b: float) -> float:
    top = max(a, b)
    return abs(a - b) / top if top > 0 else 0.0


def _best(current: EstimateOutcome, candidate: EstimateOutcome) -> EstimateOutcome:
    return candidate if candidate.estimate.value > current.estimate.value else current

