"""
Multiplier Module

Fourier multiplier F ↦ mF 와 χ_K 의 norm 추정

- operators.py: multiplier 적용과 LinearOperator
- norms.py: 𝓕L^p norm, periodized norm, 쌍대성 검사
- equivalence.py: sampling / interpolation / multiplier 동치 실험
- scan.py: 해상도 스캔 칸
"""
from .operators import (
    apply_multiplier, fine_multiplier_operator, periodized_multiplier_operator, reflect_flat,
)
from .norms import (
    default_model,
    multiplier_norm,
    estimate_multiplier_norm,
    periodized_multiplier_norm,
    estimate_periodized_multiplier_norm,
    multiplier_duality_check,
    half_line_projection_norm,
    cube_reference_norm,
)
from .equivalence import equivalence_experiment
from .scan import ScanCell, ScanCellOutcome, run_scan_cell, try_scan_cell

__all__ = [
    "apply_multiplier", "fine_multiplier_operator", "periodized_multiplier_operator", "reflect_flat",
    "default_model", "multiplier_norm", "estimate_multiplier_norm",
    "periodized_multiplier_norm", "estimate_periodized_multiplier_norm", "multiplier_duality_check",
    "half_line_projection_norm", "cube_reference_norm",
    "equivalence_experiment",
    "ScanCell", "ScanCellOutcome", "run_scan_cell", "try_scan_cell",
]
