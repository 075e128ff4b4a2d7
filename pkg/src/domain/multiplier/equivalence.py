"""
Equivalence Experiment

fundamental domain K 에서 같은 해상도의 세 상수를 계산합니다.

- C_samp(p): 샘플링 상수
- N_mult(p): G ↦ χ_K G 의 𝓕ℓ^p → 𝓕L^p norm (c(k) = a(−k) 로 같은 연산자, 같은 재시작)
- C_interp(p) = ‖S∘Π_K‖_p 와 C_samp(q) (쌍대성으로 같은 값, 교차 warm start)
"""
from typing import Optional

from src.core.config import GeometrySettings
from src.core.exceptions import NotFundamentalDomainError
from src.core.logging import get_logger
from src.domain.entities.field import TorusModel
from src.domain.entities.models import EquivalenceReport
from src.domain.entities.setspec import SetSpec
from src.domain.geometry.rasterizer import rasterize_covering
from src.domain.geometry.tiling import classify_tiling
from src.domain.multiplier.norms import periodized_multiplier_norm
from src.domain.optimization.power_method import PowerMethodOptimizer, dual_map
from src.domain.sampling.constants import interpolation_constant, sampling_constant
from src.domain.spectral.norms import conjugate_exponent, validate_exponent

logger = get_logger(__name__)

PAIRED_TOLERANCE = 1e-3
CONJUGATE_TOLERANCE = 0.05
CROSS_ROUNDS = 3


def _relative(a: float, b: float) -> float:
    top = max(abs(a), abs(b))
    return abs(a - b) / top if top > 0 else 0.0


def equivalence_experiment(
    spec: SetSpec,
    p: float,
    resolution: int,
    oversampling: Optional[int] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    geometry: Optional[GeometrySettings] = None,
    name: Optional[str] = None,
) -> EquivalenceReport:
    """
    Args:
        spec: 집합 K
        p: 지수
        resolution: M
        oversampling: s (None이면 최소 허용값)
        optimizer: 양쪽 경로가 공유하는 최적화기
        seed: 공유 루트 seed
        geometry: 타일링 판정 설정

    Raises:
        NotFundamentalDomainError: 타일링 판정이 fundamental 이 아님
    """
    p = validate_exponent(p)
    q = conjugate_exponent(p)
    optimizer = optimizer or PowerMethodOptimizer()
    name = name or spec.to_expression()

    tiling = classify_tiling(spec, (resolution, 2 * resolution, 4 * resolution), geometry, name=name)
    if tiling.verdict != "fundamental":
        raise NotFundamentalDomainError(
            f"{name}: 타일링 판정이 '{tiling.verdict}' 입니다. 동치 관계는 K 가 2πℤⁿ 의 "
            "fundamental domain 이라는 가정 아래에서만 성립합니다"
        )

    raster = rasterize_covering(spec, resolution, name=name)
    model = TorusModel.for_raster(raster, oversampling)

    sampling = sampling_constant(raster, p, model, optimizer, seed)
    multiplier = periodized_multiplier_norm(raster, p, model, optimizer, seed)

    conjugate = sampling_constant(raster, q, model, optimizer, seed)
    interpolation = interpolation_constant(
        raster, p, model, optimizer, seed,
        warm_starts=[dual_map(conjugate.operator.matvec(conjugate.vector), q)],
    )
    for _ in range(CROSS_ROUNDS - 1):
        if _relative(interpolation.estimate.value, conjugate.estimate.value) <= CONJUGATE_TOLERANCE:
            break
        if interpolation.estimate.value > conjugate.estimate.value:
            refined = sampling_constant(
                raster, q, model, optimizer, seed,
                warm_starts=[dual_map(interpolation.operator.matvec(interpolation.vector), p)],
            )
            if refined.estimate.value > conjugate.estimate.value:
                conjugate = refined
        else:
            refined = interpolation_constant(
                raster, p, model, optimizer, seed,
                warm_starts=[dual_map(conjugate.operator.matvec(conjugate.vector), q)],
            )
            if refined.estimate.value > interpolation.estimate.value:
                interpolation = refined

    paired_gap = _relative(sampling.estimate.value, multiplier.estimate.value)
    conjugate_gap = _relative(interpolation.estimate.value, conjugate.estimate.value)
    consistent = paired_gap <= PAIRED_TOLERANCE and conjugate_gap <= CONJUGATE_TOLERANCE

    report = EquivalenceReport(
        set_name=name, p=p, M=resolution, s=model.oversampling,
        tiling_verdict=tiling.verdict,
        sampling=sampling.estimate,
        interpolation=interpolation.estimate,
        conjugate_sampling=conjugate.estimate,
        multiplier=multiplier.estimate,
        sampling_vs_multiplier=paired_gap,
        interpolation_vs_conjugate=conjugate_gap,
        verdict="consistent" if consistent else "inconsistent",
    )
    logger.info("[Equivalence] %s p=%g M=%d C_samp=%.6f N_mult=%.6f C_interp=%.6f C_samp(q)=%.6f → %s",
                name, p, resolution, sampling.estimate.value, multiplier.estimate.value,
                interpolation.estimate.value, conjugate.estimate.value, report.verdict)
    return report
