"""
Sampling / Interpolation Constants

- C_samp(p) = sup ‖f‖_p / ‖f|ℤⁿ‖_{ℓ^p}  (f ∈ E_K^p)
- C_interp(p) = ‖S ∘ Π_K‖_{L^p→ℓ^p}  (χ_K 사영 후 샘플링)
  최소 보간 함수 min { ‖f‖_p : f ∈ E_K^p, f|ℤⁿ = a } 로 제한한 ratio도 함께 보고

두 상수 모두 nonlinear power method로 아래에서 추정합니다.

샘플링: T: a ↦ f, F = χ_K · tile(fftn a). 잔여류 중복이 없으면 f = T(f|ℤⁿ) 이므로
sup ‖T a‖ / ‖a‖ 가 곧 C_samp 입니다 (덮이지 않은 잔여류는 a의 부분공간 사영으로 제외).
잔여류 중복이 있으면 샘플이 0인 0 아닌 f 가 존재하므로 aliasing 으로 보고합니다.

보간: R = S ∘ Π_K (공간 격자 → 샘플), C_interp(p) = ‖R‖_{p→p}.
가중 내적에서 R* = T 이므로 잔여류 중복이 없으면 ‖R‖_{p→p} = C_samp(q), q = p' 입니다.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.sparse.linalg import LinearOperator, lsqr

from src.core.exceptions import CoverageViolationError
from src.core.logging import get_logger
from src.domain.entities.field import BandlimitedField, SampleSequence, TorusModel
from src.domain.entities.grid import RasterizedSet
from src.domain.entities.models import ConstantEstimate
from src.domain.geometry.tiling import residue_multiplicity
from src.domain.optimization.power_method import PowerMethodOptimizer, PowerMethodResult, dual_map, restart_rng
from src.domain.sampling.lattice import sample_lattice
from src.domain.spectral.generators import complex_normal
from src.domain.spectral.norms import conjugate_exponent, lp_norm, lp_norm_samples, validate_exponent
from src.domain.spectral.transforms import apply_spectral_weights, forward_transform, inverse_transform

logger = get_logger(__name__)

ALIASING_EPS = np.finfo(float).eps
IRLS_ITERATIONS = 30
IRLS_FLOOR = 1e-8


@dataclass
class EstimateOutcome:
    """추정치와 최적 입력 벡터 (교차 warm start 용)"""
    estimate: ConstantEstimate
    vector: np.ndarray
    operator: Optional[LinearOperator] = None


# =============================================================================
# Operators
# =============================================================================

def sampling_operator(raster: RasterizedSet, model: TorusModel) -> LinearOperator:
    """T: a (M^n) ↦ f (N^n), F = χ_K · tile(fftn a)"""
    mask = raster.mask
    grid = model.grid
    lattice_shape, fine_shape = model.lattice_shape, model.fine_shape
    scale = float(model.oversampling) ** model.n

    def matvec(a):
        periodic = np.fft.fftn(np.asarray(a).reshape(lattice_shape))
        return inverse_transform(np.where(mask, grid.tile(periodic), 0), model).ravel()

    def rmatvec(f):
        spectrum = scale * forward_transform(np.asarray(f).reshape(fine_shape), model)
        return np.fft.ifftn(grid.fold(np.where(mask, spectrum, 0))).ravel()

    return LinearOperator(
        (int(np.prod(fine_shape)), int(np.prod(lattice_shape))),
        matvec=matvec, rmatvec=rmatvec, dtype=complex,
    )


def interpolation_operator(raster: RasterizedSet, model: TorusModel) -> LinearOperator:
    """R: f (N^n) ↦ (Π_K f)|ℤⁿ (M^n).  R^H = s^{-n} T"""
    mask = raster.mask.astype(float)
    fine_shape = model.fine_shape
    index = tuple(slice(None, None, model.oversampling) for _ in range(model.n))
    forward = sampling_operator(raster, model)

    def matvec(f):
        projected = apply_spectral_weights(np.asarray(f).reshape(fine_shape), mask, model)
        return projected[index].ravel()

    def rmatvec(a):
        return model.cell_weight * forward.matvec(a)

    return LinearOperator(
        (forward.shape[1], forward.shape[0]), matvec=matvec, rmatvec=rmatvec, dtype=complex,
    )


def residue_projection(raster: RasterizedSet, model: TorusModel):
    """덮인 잔여류로의 사영 a ↦ ifftn(χ_V fftn a). 모두 덮이면 None"""
    covered = residue_multiplicity(raster) > 0
    if covered.all():
        return None
    shape = model.lattice_shape

    def project(a):
        a = np.asarray(a).reshape(shape)
        return np.fft.ifftn(np.where(covered, np.fft.fftn(a), 0)).ravel()

    return project


def aliasing_kernel_element(raster: RasterizedSet, model: TorusModel) -> Optional[BandlimitedField]:
    """같은 잔여류의 두 점으로 만든 F = e_{i1} − e_{i2} (정수 격자에서 정확히 0)"""
    multiplicity = residue_multiplicity(raster)
    if multiplicity.max(initial=0) < 2:
        return None
    residue = np.unravel_index(int(np.argmax(multiplicity)), multiplicity.shape)
    points = np.argwhere(raster.mask)
    members = points[np.all(points % model.resolution == np.asarray(residue), axis=1)]
    spectrum = np.zeros(model.spectral_shape, dtype=complex)
    spectrum[tuple(members[0])] = 1.0
    spectrum[tuple(members[1])] = -1.0
    return BandlimitedField(model, spectrum, support=raster.mask)


def quadrature_error(raster: RasterizedSet, model: TorusModel, samples: np.ndarray, p: float) -> float:
    """같은 스펙트럼을 s, 2s 에서 평가한 ratio 차이"""
    denominator = lp_norm_samples(samples, p)
    if denominator == 0:
        return 0.0
    spectrum = np.where(raster.mask, model.grid.tile(np.fft.fftn(samples)), 0)
    coarse = BandlimitedField(model, spectrum)
    fine = coarse.on_model(model.refined())
    return abs(lp_norm(coarse, p) - lp_norm(fine, p)) / denominator


# =============================================================================
# Sampling constant
# =============================================================================

def sampling_constant(
    raster: RasterizedSet,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    warm_starts: Sequence[np.ndarray] = (),
    start_map=None,
) -> EstimateOutcome:
    """C_samp(p) 추정 (최적 샘플 벡터 포함)"""
    p = validate_exponent(p)
    model = model or TorusModel.for_raster(raster)
    optimizer = optimizer or PowerMethodOptimizer()
    operator = sampling_operator(raster, model)
    M, s = model.resolution, model.oversampling

    kernel = aliasing_kernel_element(raster, model)
    if kernel is not None:
        field_norm = lp_norm(kernel, p)
        sample_norm = lp_norm_samples(sample_lattice(kernel), p)
        value = field_norm / max(sample_norm, ALIASING_EPS * field_norm)
        logger.warning("[Sampling] %s: 잔여류 중복 (aliasing) → ratio %.3e", raster.name, value)
        estimate = ConstantEstimate(
            kind="sampling", p=p, M=M, s=s, value=value, restarts=0,
            per_restart_ratios=[value], seed=seed, flags=["aliasing"], set_name=raster.name,
        )
        return EstimateOutcome(estimate, np.zeros(operator.shape[1], dtype=complex), operator)

    result = optimizer.maximize(
        operator, p,
        seed=seed,
        input_weight=1.0,
        output_weight=model.cell_weight,
        project=residue_projection(raster, model),
        start_map=start_map,
        warm_starts=warm_starts,
        label=f"sampling {raster.name}",
    )
    samples = result.best_vector.reshape(model.lattice_shape)
    estimate = result.to_estimate(
        "sampling", p, M, s, seed=seed, set_name=raster.name,
        quadrature_error=quadrature_error(raster, model, samples, p),
    )
    logger.info("[Sampling] %s p=%g M=%d s=%d C_samp ≥ %.6f", raster.name, p, M, s, estimate.value)
    return EstimateOutcome(estimate, result.best_vector, operator)


def estimate_sampling_constant(
    mask: RasterizedSet,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    warm_starts: Sequence[np.ndarray] = (),
    start_map=None,
) -> ConstantEstimate:
    """C_samp(p) lower bound"""
    return sampling_constant(mask, p, model, optimizer, seed, warm_starts, start_map).estimate


# =============================================================================
# Interpolation constant
# =============================================================================

def _null_space_operator(raster: RasterizedSet, model: TorusModel):
    """잔여류 내 차이 (e_j − e_first) 로 만든 Inv∘Z 의 실수화 연산자. 자유도가 없으면 None"""
    points = np.argwhere(raster.mask)
    residues = np.ravel_multi_index(tuple((points % model.resolution).T), model.lattice_shape)
    order = np.argsort(residues, kind="stable")
    points, residues = points[order], residues[order]
    first_of = {}
    free, anchor = [], []
    for point, residue in zip(points, residues):
        flat = np.ravel_multi_index(tuple(point), model.spectral_shape)
        if residue not in first_of:
            first_of[residue] = flat
        else:
            free.append(flat)
            anchor.append(first_of[residue])
    if not free:
        return None

    free, anchor = np.asarray(free), np.asarray(anchor)
    size = int(np.prod(model.spectral_shape))
    count, fine_size = len(free), int(np.prod(model.fine_shape))
    adjoint_scale = float(model.oversampling) ** model.n / float(model.resolution) ** model.n

    def lift(y):
        spectrum = np.zeros(size, dtype=complex)
        spectrum[free] = y
        np.subtract.at(spectrum, anchor, y)
        return spectrum.reshape(model.spectral_shape)

    def matvec(v):
        y = v[:count] + 1j * v[count:]
        f = inverse_transform(lift(y), model).ravel()
        return np.concatenate([f.real, f.imag])

    def rmatvec(w):
        f = (w[:fine_size] + 1j * w[fine_size:]).reshape(model.fine_shape)
        spectrum = (adjoint_scale * forward_transform(f, model)).ravel()
        y = spectrum[free] - spectrum[anchor]
        return np.concatenate([y.real, y.imag])

    operator = LinearOperator((2 * fine_size, 2 * count), matvec=matvec, rmatvec=rmatvec, dtype=float)
    return operator, lift, count


def minimal_interpolant(
    samples: SampleSequence,
    raster: RasterizedSet,
    p: float,
    iterations: int = IRLS_ITERATIONS,
) -> Tuple[BandlimitedField, bool]:
    """
    f|ℤⁿ = a 를 만족하는 E_K 원소 중 ‖f‖_p 최소 근사

    p = 2 이면 잔여류 안에서 균등 분배가 정확한 최소해이고,
    그 외에는 영공간 위 IRLS (가중치 |f|^{p-2}, scipy lsqr) 로 근사합니다.

    Returns:
        (field, approximate)

    Raises:
        CoverageViolationError: 덮이지 않은 잔여류에 0 아닌 G 가 있음
    """
    p = validate_exponent(p)
    model = samples.model
    periodic = np.fft.fftn(samples.values)
    multiplicity = residue_multiplicity(raster)
    if np.any((multiplicity == 0) & (np.abs(periodic) > 1e-12 * max(np.abs(periodic).max(), 1.0))):
        raise CoverageViolationError(f"{raster.name}: 덮이지 않은 잔여류의 샘플 성분은 보간할 수 없습니다")

    spread = periodic / np.maximum(multiplicity, 1)
    base = np.where(raster.mask, model.grid.tile(spread), 0)
    null_space = _null_space_operator(raster, model) if p != 2 else None
    if null_space is None:
        return BandlimitedField(model, base, support=raster.mask), False

    operator, lift, count = null_space
    f0 = inverse_transform(base, model).ravel()
    f0_real = np.concatenate([f0.real, f0.imag])
    y = np.zeros(2 * count)
    for _ in range(iterations):
        lifted = operator.matvec(y)
        f = f0 + lifted[: f0.size] + 1j * lifted[f0.size:]
        magnitude = np.abs(f)
        magnitude = np.maximum(magnitude, IRLS_FLOOR * magnitude.max(initial=0.0))
        root = np.tile(magnitude ** ((p - 2) / 2), 2)

        weighted = LinearOperator(
            operator.shape,
            matvec=lambda v, root=root: root * operator.matvec(v),
            rmatvec=lambda w, root=root: operator.rmatvec(root * w),
            dtype=float,
        )
        y_next = lsqr(weighted, -root * f0_real, atol=1e-10, btol=1e-10)[0]
        change = np.linalg.norm(y_next - y)
        y = y_next
        if change <= 1e-9 * max(np.linalg.norm(y), 1.0):
            break

    spectrum = base + lift(y[:count] + 1j * y[count:])
    return BandlimitedField(model, spectrum, support=raster.mask), True


def interpolation_constant(
    raster: RasterizedSet,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    warm_starts: Sequence[np.ndarray] = (),
) -> EstimateOutcome:
    """C_interp(p) = ‖R‖_{p→p} 추정 (최적 공간 벡터 포함)

    Raises:
        CoverageViolationError: 잔여류 일부가 덮이지 않음 (보간 사상이 정의되지 않음)
    """
    p = validate_exponent(p)
    q = conjugate_exponent(p)
    model = model or TorusModel.for_raster(raster)
    optimizer = optimizer or PowerMethodOptimizer()
    multiplicity = residue_multiplicity(raster)
    if not (multiplicity > 0).all():
        uncovered = float(np.count_nonzero(multiplicity == 0)) * raster.grid.cell_volume
        raise CoverageViolationError(
            f"{raster.name}: 격자 이동들이 한 셀을 덮지 않습니다 (gap {uncovered:.4g}); "
            "보간 상수는 정의되지 않습니다"
        )

    forward = sampling_operator(raster, model)
    operator = interpolation_operator(raster, model)
    starts = list(warm_starts)
    for r in range(optimizer.profile.restarts):
        a0 = complex_normal(restart_rng(seed, r), forward.shape[1])
        starts.append(dual_map(forward.matvec(a0), q))

    result: PowerMethodResult = optimizer.maximize(
        operator, p,
        seed=seed,
        input_weight=model.cell_weight,
        output_weight=1.0,
        warm_starts=starts,
        restarts=0,
        label=f"interpolation {raster.name}",
    )

    samples = SampleSequence(model, operator.matvec(result.best_vector).reshape(model.lattice_shape))
    flags = []
    restricted = None
    if lp_norm_samples(samples, p) > 0:
        interpolant, approximate = minimal_interpolant(samples, raster, p)
        if approximate:
            flags.append("approximate_minimizer")
        norm = lp_norm(interpolant, p)
        restricted = lp_norm_samples(samples, p) / norm if norm > 0 else None

    estimate = result.to_estimate(
        "interpolation", p, model.resolution, model.oversampling,
        seed=seed, set_name=raster.name, flags=flags, restricted_value=restricted,
    )
    logger.info("[Interpolation] %s p=%g M=%d C_interp ≥ %.6f", raster.name, p, model.resolution, estimate.value)
    return EstimateOutcome(estimate, result.best_vector, operator)


def estimate_interpolation_constant(
    mask: RasterizedSet,
    p: float,
    model: Optional[TorusModel] = None,
    optimizer: Optional[PowerMethodOptimizer] = None,
    seed: int = 0,
    warm_starts: Sequence[np.ndarray] = (),
) -> ConstantEstimate:
    """C_interp(p) lower bound"""
    return interpolation_constant(mask, p, model, optimizer, seed, warm_starts).estimate
