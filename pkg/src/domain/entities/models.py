"""
Result Models

수치 실험 결과의 직렬화 스키마 (Pydantic)

- ConstantEstimate: 최적 상수의 lower bound 추정치 + 최적화 trace
- TilingReport: 격자 이동 겹침 / 덮임 판정
- ShannonReport: 1차원 Shannon 등거리 검사
- DualityReport / EquivalenceReport: multiplier 쌍대성, 동치 실험
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

EstimateKind = Literal["sampling", "interpolation", "multiplier", "periodized_multiplier"]
TilingVerdict = Literal["fundamental", "overlap_violation", "coverage_violation", "both", "inconclusive"]
MeasureStatus = Literal["zero", "positive", "inconclusive"]


class ConstantEstimate(BaseModel):
    """최적 상수 추정치

    value는 모든 재시작/반복 중 최대 ratio이므로 이산 상수의 인증된 lower bound입니다.
    Fourier 규약: F(ξ) = ∫ f(x) e^{-ix·ξ} dx, 역변환에 (2π)^{-n}.
    """
    model_config = ConfigDict(frozen=True)

    kind: EstimateKind = Field(..., description="추정한 상수 종류")
    p: float = Field(..., description="지수 p", gt=1)
    M: int = Field(..., description="스펙트럼 해상도")
    s: int = Field(..., description="공간 oversampling")
    value: float = Field(..., description="상수 추정치 (최대 ratio)", ge=0)
    restarts: int = Field(..., description="재시작 횟수", ge=0)
    per_restart_ratios: List[float] = Field(default_factory=list, description="재시작별 최종 최대 ratio")
    iterations: List[int] = Field(default_factory=list, description="재시작별 반복 횟수")
    quadrature_error: float = Field(0.0, description="s vs 2s 재평가 차이 (해당 없으면 0)", ge=0)
    seed: int = Field(0, description="루트 seed")
    converged: bool = Field(True, description="모든 재시작이 수렴했는지")
    flags: List[str] = Field(default_factory=list, description="non_convergence, aliasing, approximate_minimizer 등")
    set_name: str = Field("", description="집합 표현식")
    restricted_value: Optional[float] = Field(None, description="최소 보간 함수로 제한한 ratio (보간 상수)")

    @model_validator(mode="after")
    def _value_dominates_ratios(self) -> "ConstantEstimate":
        if self.per_restart_ratios and max(self.per_restart_ratios) > self.value * (1 + 1e-12):
            raise ValueError("value must dominate every per-restart ratio")
        return self

    @property
    def spread(self) -> float:
        """재시작 간 상대 편차"""
        if not self.per_restart_ratios or self.value == 0:
            return 0.0
        return (max(self.per_restart_ratios) - min(self.per_restart_ratios)) / self.value


class ShiftCertificate(BaseModel):
    """측도 하나(겹침 또는 gap)의 해상도별 값과 0-판정"""
    shift: Optional[List[int]] = Field(None, description="격자 이동 k (gap이면 None)")
    measures: List[float] = Field(..., description="해상도별 측도")
    rate_constant: float = Field(..., description="max_M m(M)·M")
    slope: Optional[float] = Field(None, description="log m vs log M 기울기")
    status: MeasureStatus = Field(..., description="zero / positive / inconclusive")


class TilingReport(BaseModel):
    """격자 2πℤⁿ 에 대한 타일링 판정"""
    set_name: str = Field(..., description="집합 표현식")
    resolutions: List[int] = Field(..., description="사용한 해상도 M 목록")
    measures: List[float] = Field(..., description="해상도별 집합 측도")
    overlaps: List[ShiftCertificate] = Field(default_factory=list, description="k ≠ 0 별 겹침")
    gap: ShiftCertificate = Field(..., description="한 셀의 미덮임 측도")
    boundary_bound: float = Field(..., description="허용 상수 (배수 × 경계 길이)")
    verdict: TilingVerdict = Field(..., description="판정")

    @property
    def max_overlap(self) -> float:
        return max((c.measures[-1] for c in self.overlaps), default=0.0)


class ShannonReport(BaseModel):
    """1차원 Shannon 샘플링 검사 (‖√h·f(kh)‖₂ vs ‖f‖₂)"""
    omega: float = Field(..., description="대역 ω", gt=0)
    h: float = Field(..., description="샘플 간격", gt=0)
    M: int = Field(..., description="스펙트럼 해상도")
    seed: int = Field(0, description="field seed")
    field_norm: float = Field(..., description="‖f‖₂")
    sample_norm: float = Field(..., description="‖√h·f(kh)‖₂")
    isometry_error: float = Field(..., description="상대 오차 |sample − field| / field", ge=0)
    reconstruction_error: float = Field(..., description="샘플 재구성의 최대 상대 오차", ge=0)


class DualityReport(BaseModel):
    """p 와 q = p/(p−1) 에서의 multiplier norm 비교"""
    set_name: str = Field("", description="multiplier 이름")
    p: float = Field(..., description="지수 p", gt=1)
    q: float = Field(..., description="쌍대 지수 q", gt=1)
    value_p: float = Field(..., description="‖m‖_{p→p} 추정치")
    value_q: float = Field(..., description="‖m̄‖_{q→q} 추정치")
    relative_gap: float = Field(..., description="|value_p − value_q| / max", ge=0)
    spread: float = Field(0.0, description="두 쪽 재시작 spread 합", ge=0)
    rounds: int = Field(1, description="교차 warm start 횟수", ge=1)
    agree: bool = Field(..., description="gap ≤ max(허용오차, spread)")


class EquivalenceReport(BaseModel):
    """fundamental domain K 위의 sampling / interpolation / periodized multiplier 비교"""
    set_name: str = Field(..., description="집합 표현식")
    p: float = Field(..., description="지수 p", gt=1)
    M: int = Field(..., description="스펙트럼 해상도")
    s: int = Field(..., description="공간 oversampling")
    tiling_verdict: str = Field(..., description="사전 타일링 판정")
    sampling: ConstantEstimate = Field(..., description="C_samp(p)")
    interpolation: ConstantEstimate = Field(..., description="C_interp(p) = ‖S∘Π_K‖_p")
    conjugate_sampling: ConstantEstimate = Field(..., description="C_samp(q) (보간 상수와 비교)")
    multiplier: ConstantEstimate = Field(..., description="χ_K 의 𝓕ℓ^p → 𝓕L^p norm")
    sampling_vs_multiplier: float = Field(..., description="C_samp 와 N_mult 의 상대 차이", ge=0)
    interpolation_vs_conjugate: float = Field(..., description="C_interp 와 C_samp(q) 의 상대 차이", ge=0)
    verdict: Literal["consistent", "inconsistent"] = Field(..., description="허용오차 내 일치 여부")
