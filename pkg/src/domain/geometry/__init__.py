"""
Geometry Module

compact 스펙트럼 K의 표현, rasterize, 2πℤⁿ 타일링 판정
"""
from .expression import parse_expression, split_expressions
from .rasterizer import rasterize, rasterize_covering, check_box
from .tiling import (
    shift_array, lattice_shifts, overlap_measure, coverage_gap, residue_multiplicity,
    classify_tiling,
)

__all__ = [
    "parse_expression", "split_expressions",
    "rasterize", "rasterize_covering", "check_box",
    "shift_array", "lattice_shifts", "overlap_measure", "coverage_gap",
    "residue_multiplicity", "classify_tiling",
]
