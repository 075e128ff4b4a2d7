"""
Hölder Bounds

θ = φ 의 역변환, A = max_x Σ_k |θ(x + k)|, ‖θ‖₁ = s^{-n} Σ_x |θ(x)| 로부터
이산 모델에서 절대 넘지 않는 상수를 계산합니다.

- product_bound: ‖φG‖_{FL^p} ≤ C_φ ‖c‖_{ℓ^p},  C_φ^p = A^{p-1} ‖θ‖₁
  (φG 의 역변환은 Σ_k c(k) θ(x + k))
- plancherel_polya_bound: ‖f|ℤⁿ‖_{ℓ^p} ≤ C_PP ‖f‖_p (f ∈ E_K),  C_PP^p = ‖θ‖₁^{p-1} A
  (φ = χ_K 이면 f = f ⊛ θ 가 모델 위에서 정확)
"""
from typing import Optional, Tuple

import numpy as np

from src.core.exceptions import GridMismatchError
from src.domain.entities.field import BandlimitedField, TorusModel
from src.domain.entities.grid import RasterizedSet
from src.domain.sampling.bump import BumpSpec, build_bump
from src.domain.spectral.norms import validate_exponent
from src.domain.spectral.transforms import inverse_transform


def kernel_sums(phi: np.ndarray, model: TorusModel) -> Tuple[float, float]:
    """(‖θ‖₁, A) for θ = inverse transform of φ"""
    theta = np.abs(inverse_transform(phi, model))
    l1 = float(theta.sum()) * model.cell_weight
    M, s = model.resolution, model.oversampling
    interleaved = []
    for _ in range(model.n):
        interleaved.extend((M, s))
    lattice_sums = theta.reshape(interleaved).sum(axis=tuple(range(0, 2 * model.n, 2)))
    return l1, float(lattice_sums.max())


def product_bound(
    raster: RasterizedSet,
    p: float,
    bump: Optional[BumpSpec] = None,
    model: Optional[TorusModel] = None,
) -> float:
    """C_φ (φ = bump, None이면 χ_K)"""
    p = validate_exponent(p)
    model = model or TorusModel.for_raster(raster)
    l1, lattice_max = kernel_sums(build_bump(raster, bump), model)
    return float((lattice_max ** (p - 1) * l1) ** (1.0 / p))


def plancherel_polya_bound(raster: RasterizedSet, p: float, model: Optional[TorusModel] = None) -> float:
    """C_PP (φ = χ_K)"""
    p = validate_exponent(p)
    model = model or TorusModel.for_raster(raster)
    l1, lattice_max = kernel_sums(raster.mask.astype(float), model)
    return float((l1 ** (p - 1) * lattice_max) ** (1.0 / p))


def product_field(coefficients: np.ndarray, phi: np.ndarray, model: TorusModel) -> BandlimitedField:
    """계수열 c 로부터 G = Σ_k c(k) e^{ik·ξ} 를 만들고 φG 의 field를 반환"""
    coefficients = np.asarray(coefficients)
    model.check_lattice(coefficients)
    if phi.shape != model.spectral_shape:
        raise GridMismatchError(f"φ shape {phi.shape} != spectral shape {model.spectral_shape}")
    periodic = np.fft.ifftn(coefficients) * coefficients.size
    return BandlimitedField(model, phi * model.grid.tile(periodic), support=phi > 0)
