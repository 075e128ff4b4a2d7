"""
Multiplier Operators

- apply_multiplier: F ↦ mF (박스 격자 위 점별 곱) 후 역변환
- fine_multiplier_operator: 공간 격자 위 f ↦ (m f̂)^∨ (𝓕L^p → 𝓕L^p)
- periodized_multiplier_operator: c ↦ (χ_K G)^∨, G = Σ_k c(k) e^{ik·ξ} (𝓕ℓ^p → 𝓕L^p)

periodized 경로는 c(k) = a(−k) 치환으로 샘플링 연산자 T 와 같은 연산자입니다.
"""
import numpy as np
from scipy.sparse.linalg import LinearOperator

from src.core.exceptions import GridMismatchError
from src.domain.entities.field import BandlimitedField, TorusModel
from src.domain.entities.grid import RasterizedSet
from src.domain.entities.multiplier import MultiplierSpec
from src.domain.spectral.transforms import apply_spectral_weights, inverse_transform, reflect


def apply_multiplier(m: MultiplierSpec, field: BandlimitedField) -> BandlimitedField:
    """
    mF 의 field

    Raises:
        GridMismatchError: m 과 field 의 스펙트럼 격자가 다름
    """
    if m.grid != field.model.grid:
        raise GridMismatchError(f"multiplier 격자 {m.grid.describe()} != field 격자 {field.model.grid.describe()}")
    spectrum = m.values * field.spectrum
    support = field.support
    if support is not None:
        support = support & (m.values != 0)
    return BandlimitedField(field.model, spectrum, support=support)


def fine_multiplier_operator(m: MultiplierSpec, model: TorusModel) -> LinearOperator:
    """공간 격자 전체(N^n) 위의 multiplier. adjoint는 conj(m)"""
    if m.grid != model.grid:
        raise GridMismatchError("multiplier 격자와 모델 격자가 다릅니다")
    shape = model.fine_shape
    weights, adjoint_weights = m.values, np.conj(m.values)

    def matvec(f):
        return apply_spectral_weights(np.asarray(f).reshape(shape), weights, model).ravel()

    def rmatvec(f):
        return apply_spectral_weights(np.asarray(f).reshape(shape), adjoint_weights, model).ravel()

    size = int(np.prod(shape))
    return LinearOperator((size, size), matvec=matvec, rmatvec=rmatvec, dtype=complex)


def periodized_multiplier_operator(raster: RasterizedSet, model: TorusModel) -> LinearOperator:
    """c (M^n) ↦ f (N^n), F = χ_K · tile(G), G = M^n ifftn(c)"""
    if raster.grid != model.grid:
        raise GridMismatchError("mask 격자와 모델 격자가 다릅니다")
    mask = raster.mask.astype(float)
    lattice_shape, fine_shape = model.lattice_shape, model.fine_shape
    lattice_size = int(np.prod(lattice_shape))
    index = tuple(slice(None, None, model.oversampling) for _ in range(model.n))
    scale = float(model.oversampling) ** model.n

    def matvec(c):
        periodic = np.fft.ifftn(np.asarray(c).reshape(lattice_shape)) * lattice_size
        return inverse_transform(mask * model.grid.tile(periodic), model).ravel()

    def rmatvec(f):
        projected = apply_spectral_weights(np.asarray(f).reshape(fine_shape), mask, model)
        return scale * reflect(projected[index]).ravel()

    return LinearOperator(
        (int(np.prod(fine_shape)), lattice_size), matvec=matvec, rmatvec=rmatvec, dtype=complex,
    )


def reflect_flat(values: np.ndarray, model: TorusModel) -> np.ndarray:
    """평탄화된 격자 벡터의 a(k) → a(−k)"""
    return reflect(np.asarray(values).reshape(model.lattice_shape)).ravel()
