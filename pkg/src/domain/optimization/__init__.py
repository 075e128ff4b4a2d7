"""
Optimization Module

p/q 쌍대 사상을 이용한 nonlinear power method
"""
from .power_method import (
    PowerMethodOptimizer, PowerMethodResult, RestartTrace, dual_map, restart_rng, probe_rng,
)

__all__ = [
    "PowerMethodOptimizer", "PowerMethodResult", "RestartTrace",
    "dual_map", "restart_rng", "probe_rng",
]
