"""
Domain Entities

도메인의 핵심 데이터 구조를 정의합니다.
- SetSpec: 집합 표현 트리 (Cube, Ball, Translate, Union, Intersection, Difference)
- GridSpec / RasterizedSet: 스펙트럼 격자와 χ_K
- TorusModel / BandlimitedField / PeriodicSpectrum / SampleSequence: 이산 모델
- MultiplierSpec: multiplier 심볼
- Models: 결과 스키마 (ConstantEstimate, TilingReport)
"""
from .setspec import (
    SetSpec, Cube, Ball, HalfSpaceGraph, Translate, Union, Intersection, Difference,
    Named, counterexample_k,
)
from .grid import GridSpec, RasterizedSet
from .field import TorusModel, BandlimitedField, PeriodicSpectrum, SampleSequence
from .multiplier import MultiplierSpec
from .models import (
    ConstantEstimate, DualityReport, EquivalenceReport, ShannonReport, ShiftCertificate, TilingReport,
)

__all__ = [
    "SetSpec", "Cube", "Ball", "HalfSpaceGraph", "Translate", "Union", "Intersection",
    "Difference", "Named", "counterexample_k",
    "GridSpec", "RasterizedSet",
    "TorusModel", "BandlimitedField", "PeriodicSpectrum", "SampleSequence",
    "MultiplierSpec",
    "ConstantEstimate", "DualityReport", "EquivalenceReport", "ShannonReport", "ShiftCertificate", "TilingReport",
]
