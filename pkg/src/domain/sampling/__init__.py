"""
Sampling Module

정수 격자 ℤⁿ 위의 샘플링 / 보간

- lattice.py: 샘플링과 재구성 F = φG
- bump.py: K 위에서 1인 mollified indicator φ
- witness.py: 정수 샘플이 0인 E_K 원소 (겹침이 있는 K)
- constants.py: sampling / interpolation 상수 추정
- bounds.py: Hölder 상수 C_φ, C_PP
- shannon.py: 1차원 Shannon 기준선
"""
from .bump import BumpSpec, build_bump, check_disjoint_translates
from .lattice import sample_lattice, reconstruct_from_samples
from .witness import WitnessBall, locate_witness_ball, witness_generator, aliasing_witness
from .constants import (
    EstimateOutcome,
    sampling_operator,
    interpolation_operator,
    sampling_constant,
    interpolation_constant,
    estimate_sampling_constant,
    estimate_interpolation_constant,
    minimal_interpolant,
)
from .bounds import kernel_sums, product_bound, plancherel_polya_bound, product_field
from .shannon import shannon_1d, shannon_aliasing_witness

__all__ = [
    "BumpSpec", "build_bump", "check_disjoint_translates",
    "sample_lattice", "reconstruct_from_samples",
    "WitnessBall", "locate_witness_ball", "witness_generator", "aliasing_witness",
    "EstimateOutcome", "sampling_operator", "interpolation_operator",
    "sampling_constant", "interpolation_constant",
    "estimate_sampling_constant", "estimate_interpolation_constant", "minimal_interpolant",
    "kernel_sums", "product_bound", "plancherel_polya_bound", "product_field",
    "shannon_1d", "shannon_aliasing_witness",
]
