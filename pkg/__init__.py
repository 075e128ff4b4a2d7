"""
Sampling / Multiplier Lab - 격자 타일링과 안정 샘플링 수치 실험
"""
__version__ = "1.0.0"
