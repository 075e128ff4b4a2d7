"""
Evaluation Metrics

- trend.py: 해상도 스캔 추세 (Spearman, max/min ratio, 엄격 증가, Aitken 외삽)
"""
from .trend import classify_trend, extrapolated_limit, is_flat, spearman_correlation, trend_statistics

__all__ = ["trend_statistics", "spearman_correlation", "is_flat", "extrapolated_limit", "classify_trend"]
