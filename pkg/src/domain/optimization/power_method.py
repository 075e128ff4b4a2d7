"""
Nonlinear Power Method

‖A‖_{p→p} = sup ‖Ax‖_p / ‖x‖_p 를 아래에서 추정하는 p/q 쌍대 사상 반복

반복:
    y = A x
    g = y |y|^{p-2}                 (ℓ^p 쌍대 사상)
    z = A^H g                       (필요하면 부분공간 사영)
    x ← z |z|^{q-2} / ‖·‖_p          (ℓ^q 쌍대 사상, q = p/(p-1))

p = 2에서는 A^H A 에 대한 일반 power iteration과 같습니다.
보고값은 모든 반복점의 ratio 최대값이므로 항상 참값의 lower bound입니다.

Seed 규약: numpy SeedSequence(root, spawn_key=(stream, index))
- stream 0: 재시작 시작점 (index = 재시작 번호)
- stream 1: 무작위 probe
"""
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy.sparse.linalg import LinearOperator

from src.core.logging import get_logger
from src.core.profiles import OptimizerProfile, get_profile
from src.domain.entities.models import ConstantEstimate
from src.domain.spectral.generators import complex_normal
from src.domain.spectral.norms import validate_exponent, weighted_norm

logger = get_logger(__name__)

RESTART_STREAM = 0
PROBE_STREAM = 1

Projection = Callable[[np.ndarray], np.ndarray]


def dual_map(values: np.ndarray, r: float) -> np.ndarray:
    """v |v|^{r-2} (0에서는 0)"""
    values = np.asarray(values)
    magnitude = np.abs(values)
    out = np.zeros_like(values, dtype=complex)
    nonzero = magnitude > 0
    out[nonzero] = values[nonzero] * magnitude[nonzero] ** (r - 2)
    return out


def restart_rng(root_seed: int, restart: int) -> np.random.Generator:
    """재시작별 독립 난수열 (두 경로가 같은 시작점을 공유할 수 있도록 고정)"""
    return np.random.default_rng(np.random.SeedSequence(root_seed, spawn_key=(RESTART_STREAM, restart)))


def probe_rng(root_seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(root_seed, spawn_key=(PROBE_STREAM,)))


@dataclass
class RestartTrace:
    """재시작 하나의 결과"""
    ratio: float
    iterations: int
    converged: bool
    warm: bool = False


@dataclass
class PowerMethodResult:
    """최대화 결과

    Attributes:
        value: 모든 반복점(+ probe)의 최대 ratio
        best_vector: 최대 ratio를 낸 입력 벡터
        traces: 재시작별 trace
        probe_ratio: probe 최대 ratio (probe 미사용 시 0)
    """
    value: float
    best_vector: np.ndarray
    traces: List[RestartTrace] = field(default_factory=list)
    probe_ratio: float = 0.0

    @property
    def per_restart_ratios(self) -> List[float]:
        return [t.ratio for t in self.traces]

    @property
    def iterations(self) -> List[int]:
        return [t.iterations for t in self.traces]

    @property
    def converged(self) -> bool:
        return all(t.converged for t in self.traces)

    def to_estimate(self, kind: str, p: float, M: int, s: int, *, seed: int = 0, set_name: str = "",
                    quadrature_error: float = 0.0, flags=(), restricted_value=None) -> ConstantEstimate:
        """ConstantEstimate 변환 (미수렴이면 non_convergence flag 추가)"""
        flags = list(flags)
        if not self.converged and "non_convergence" not in flags:
            flags.append("non_convergence")
        return ConstantEstimate(
            kind=kind, p=p, M=M, s=s, value=self.value,
            restarts=len(self.traces),
            per_restart_ratios=self.per_restart_ratios,
            iterations=self.iterations,
            quadrature_error=quadrature_error,
            seed=seed,
            converged=self.converged,
            flags=flags,
            set_name=set_name,
            restricted_value=restricted_value,
        )


class PowerMethodOptimizer:
    """p-norm 비율 최대화기

    operator는 scipy LinearOperator (matvec / rmatvec 모두 필요, 가중치 없는 내적 기준)입니다.
    입출력 공간의 균일 가중치(공간 격자의 (1/s)^n 등)는 ratio 계산에만 쓰입니다.
    """

    def __init__(self, profile: Optional[OptimizerProfile] = None):
        self.profile = profile or get_profile("default")

    def ratio(
        self,
        operator: LinearOperator,
        x: np.ndarray,
        p: float,
        input_weight: float = 1.0,
        output_weight: float = 1.0,
    ) -> float:
        """‖Ax‖_{p,w_out} / ‖x‖_{p,w_in}"""
        denominator = weighted_norm(x, p, input_weight)
        if denominator == 0:
            return 0.0
        return weighted_norm(operator.matvec(x), p, output_weight) / denominator

    def maximize(
        self,
        operator: LinearOperator,
        p: float,
        *,
        seed: int = 0,
        input_weight: float = 1.0,
        output_weight: float = 1.0,
        project: Optional[Projection] = None,
        start_map: Optional[Projection] = None,
        warm_starts: Sequence[np.ndarray] = (),
        restarts: Optional[int] = None,
        label: str = "",
    ) -> PowerMethodResult:
        """
        ‖A‖_{p→p} lower bound

        Args:
            operator: A (scipy LinearOperator)
            p: 1 < p < ∞
            seed: 루트 seed (재시작 r의 시작점은 restart_rng(seed, r))
            input_weight / output_weight: 입출력 공간의 점당 가중치
            project: 입력 부분공간 사영 (제한된 최대화)
            start_map: 무작위 시작점에 적용할 변환 (paired run 용)
            warm_starts: 무작위 재시작 전에 먼저 돌릴 시작점들
            restarts: 무작위 재시작 수 (기본: profile.restarts)
            label: 로그 태그

        Returns:
            PowerMethodResult
        """
        p = validate_exponent(p)
        q = p / (p - 1)
        restarts = self.profile.restarts if restarts is None else restarts
        size = operator.shape[1]
        weights = (input_weight, output_weight)

        starts = [(np.asarray(w, dtype=complex).ravel(), True) for w in warm_starts]

        probe_best = 0.0
        if self.profile.probes > 0:
            probe_best, probe_vector = self._probe(operator, p, seed, weights, project, start_map)
            if probe_vector is not None:
                starts.append((probe_vector, True))

        for r in range(restarts):
            x0 = complex_normal(restart_rng(seed, r), size)
            if start_map is not None:
                x0 = start_map(x0)
            starts.append((x0, False))

        best_value, best_vector = probe_best, (starts[len(warm_starts)][0] if probe_best > 0 else None)
        traces = []
        for index, (x0, warm) in enumerate(starts):
            ratio, x_best, iterations, converged = self._run(operator, p, q, x0, weights, project)
            traces.append(RestartTrace(ratio, iterations, converged, warm))
            logger.debug("[PowerMethod] %s start=%d warm=%s ratio=%.10f iterations=%d converged=%s",
                         label, index, warm, ratio, iterations, converged)
            if best_vector is None or ratio > best_value:
                best_value, best_vector = max(best_value, ratio), x_best

        if best_vector is None:
            best_vector = np.zeros(size, dtype=complex)

        result = PowerMethodResult(best_value, best_vector, traces, probe_best)
        if not result.converged:
            logger.warning("[PowerMethod] %s p=%g: %d/%d restarts did not converge (max_iterations=%d)",
                           label, p, sum(not t.converged for t in traces), len(traces),
                           self.profile.max_iterations)
        return result

    def _run(self, operator, p, q, x0, weights, project):
        """재시작 하나. (최대 ratio, 그 벡터, 반복 수, 수렴 여부)"""
        input_weight, output_weight = weights
        x = project(x0) if project is not None else np.asarray(x0, dtype=complex)
        norm = weighted_norm(x, p, input_weight)
        if norm == 0:
            return 0.0, x, 0, True
        x = x / norm

        history: List[float] = []
        best, best_x = 0.0, x
        tolerance, patience = self.profile.tolerance, self.profile.patience

        for iteration in range(1, self.profile.max_iterations + 1):
            y = operator.matvec(x)
            ratio = weighted_norm(y, p, output_weight)  # ‖x‖ = 1
            if ratio > best:
                best, best_x = ratio, x
            history.append(best)

            if ratio == 0:
                return best, best_x, iteration, True
            if iteration > patience and history[-1] - history[-1 - patience] <= tolerance * history[-1]:
                return best, best_x, iteration, True

            z = operator.rmatvec(dual_map(y, p))
            if project is not None:
                z = project(z)
            x_next = dual_map(z, q)
            if project is not None:
                x_next = project(x_next)
            norm = weighted_norm(x_next, p, input_weight)
            if norm == 0:
                return best, best_x, iteration, True
            x = x_next / norm

        return best, best_x, self.profile.max_iterations, False

    def _probe(self, operator, p, seed, weights, project, start_map):
        """무작위 probe 중 최대 ratio와 그 벡터"""
        rng = probe_rng(seed)
        best, best_vector = 0.0, None
        for _ in range(self.profile.probes):
            x = complex_normal(rng, operator.shape[1])
            if start_map is not None:
                x = start_map(x)
            if project is not None:
                x = project(x)
            ratio = self.ratio(operator, x, p, *weights)
            if ratio > best:
                best, best_vector = ratio, x
        return best, best_vector
