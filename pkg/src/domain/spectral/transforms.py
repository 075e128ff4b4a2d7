"""
Spectral Transforms

Fourier 변환 규약 F(ξ) = ∫ f(x) e^{-ix·ξ} dx, 역변환 (2π)^{-n} ∫ ... 의 이산 실현

- inverse_transform: f(x_j) = M^{-n} Σ_ξ F(ξ) e^{i x_j·ξ}, x_j = j/s
- forward_transform: F(ξ) = s^{-n} Σ_j f(x_j) e^{-i x_j·ξ} (한 주기 Riemann 합, 모델 위에서 정확)
- periodize: G(r) = Σ_k F(r + kM), c(k) = fftn(G)/M^n = f(−k)
"""
from typing import Union as TypingUnion

import numpy as np

from src.core.exceptions import GridMismatchError
from src.domain.entities.field import BandlimitedField, PeriodicSpectrum, SampleSequence, TorusModel
from src.domain.entities.grid import RasterizedSet

SpectrumLike = TypingUnion[np.ndarray, BandlimitedField, PeriodicSpectrum]


def _spectral_slices(model: TorusModel):
    return tuple(slice(0, L) for L in model.spectral_shape)


def pad_spectrum(spectrum: np.ndarray, model: TorusModel) -> np.ndarray:
    """박스 스펙트럼을 공간 격자 크기 N^n 배열에 배치 (박스 밖 주파수 = 0)"""
    model.check_spectrum(spectrum)
    padded = np.zeros(model.fine_shape, dtype=complex)
    padded[_spectral_slices(model)] = spectrum
    return padded


def inverse_transform(spectrum: np.ndarray, model: TorusModel) -> np.ndarray:
    """
    스펙트럼 → 공간 샘플

    Args:
        spectrum: 박스 격자 위 F
        model: TorusModel

    Returns:
        공간 격자(N^n) 위의 f
    """
    spectrum = np.asarray(spectrum)
    scale = float(model.oversampling) ** model.n
    return scale * model.phase * np.fft.ifftn(pad_spectrum(spectrum, model))


def forward_transform(values: TypingUnion[np.ndarray, BandlimitedField], model: TorusModel = None) -> np.ndarray:
    """
    공간 샘플 → 박스 스펙트럼 (inverse_transform의 역)

    Args:
        values: 공간 격자 위 f 또는 BandlimitedField
        model: TorusModel (field를 넘기면 생략 가능)

    Returns:
        박스 격자 위 F
    """
    if isinstance(values, BandlimitedField):
        model = model or values.model
        values = values.values
    if model is None:
        raise GridMismatchError("forward_transform에는 TorusModel이 필요합니다")
    values = np.asarray(values)
    model.check_values(values)
    full = np.fft.fftn(values * np.conj(model.phase))
    return full[_spectral_slices(model)] / float(model.oversampling) ** model.n


def apply_spectral_weights(values: np.ndarray, weights: np.ndarray, model: TorusModel) -> np.ndarray:
    """공간 격자 함수에 박스 위 multiplier를 적용 (박스 밖 주파수는 0배)

    전체 N^n 토러스 위의 연산이므로 입력이 대역 제한일 필요는 없습니다.
    """
    values = np.asarray(values)
    model.check_values(values)
    full = np.fft.fftn(values * np.conj(model.phase))
    full *= pad_spectrum(np.asarray(weights), model)
    return model.phase * np.fft.ifftn(full)


def project_bandlimit(spectrum: SpectrumLike, mask: RasterizedSet, model: TorusModel = None) -> BandlimitedField:
    """
    χ_K 를 곱해 E_K 로 사영 (F = χ_K G 포함)

    Args:
        spectrum: 박스 스펙트럼, BandlimitedField, 또는 PeriodicSpectrum(박스로 주기 확장)
        mask: RasterizedSet (모델 격자와 같아야 함)
        model: spectrum이 배열일 때 필요

    Returns:
        mask 밖에서 0인 BandlimitedField (멱등)
    """
    if isinstance(spectrum, (BandlimitedField, PeriodicSpectrum)):
        model = model or spectrum.model
    if model is None:
        model = TorusModel.for_raster(mask)
    if mask.grid != model.grid:
        raise GridMismatchError("mask 격자와 모델 격자가 다릅니다")

    if isinstance(spectrum, PeriodicSpectrum):
        values = model.grid.tile(spectrum.values)
    elif isinstance(spectrum, BandlimitedField):
        values = spectrum.spectrum
    else:
        values = np.asarray(spectrum)
    model.check_spectrum(values)
    return BandlimitedField(model, np.where(mask.mask, values, 0), support=mask.mask)


def periodize(spectrum: TypingUnion[np.ndarray, BandlimitedField], model: TorusModel = None) -> PeriodicSpectrum:
    """
    G(ξ) = Σ_k F(ξ − 2πk) (유한합)

    Args:
        spectrum: 박스 스펙트럼 또는 BandlimitedField

    Returns:
        PeriodicSpectrum (coefficients c(k) = f(−k))
    """
    if isinstance(spectrum, BandlimitedField):
        model = model or spectrum.model
        spectrum = spectrum.spectrum
    if model is None:
        raise GridMismatchError("periodize에는 TorusModel이 필요합니다")
    spectrum = np.asarray(spectrum)
    model.check_spectrum(spectrum)
    return PeriodicSpectrum(model, model.grid.fold(spectrum))


def samples_from_periodic(periodic: PeriodicSpectrum) -> SampleSequence:
    """a = ifftn(G): 정수 격자 샘플 (Poisson 항등식)"""
    return SampleSequence(periodic.model, np.fft.ifftn(periodic.values))


def periodic_from_samples(samples: SampleSequence) -> PeriodicSpectrum:
    """G = fftn(a)"""
    return PeriodicSpectrum(samples.model, np.fft.fftn(samples.values))


def reflect(values: np.ndarray) -> np.ndarray:
    """a(k) → a(−k mod M) (각 축)"""
    values = np.asarray(values)
    index = np.ix_(*[(-np.arange(size)) % size for size in values.shape])
    return values[index]
