"""
Spectral Module

이산화 계약 위의 Fourier 변환, 대역 제한 사영, 주기화, L^p / ℓ^p 노름
"""
from .transforms import (
    inverse_transform, forward_transform, apply_spectral_weights, project_bandlimit,
    periodize, samples_from_periodic, periodic_from_samples, reflect, pad_spectrum,
)
from .norms import (
    validate_exponent, conjugate_exponent, weighted_norm, lp_norm, lp_norm_samples, parseval_norm,
)
from .generators import random_bandlimited, complex_normal

__all__ = [
    "inverse_transform", "forward_transform", "apply_spectral_weights", "project_bandlimit",
    "periodize", "samples_from_periodic", "periodic_from_samples", "reflect", "pad_spectrum",
    "validate_exponent", "conjugate_exponent", "weighted_norm", "lp_norm", "lp_norm_samples",
    "parseval_norm",
    "random_bandlimited", "complex_normal",
]
