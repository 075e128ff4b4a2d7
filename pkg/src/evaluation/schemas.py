"""
Evaluation Schemas

스캔 / 검증 실험 결과를 위한 Pydantic 모델 정의
"""

from typing import List, Optional
from pydantic import BaseModel, Field


class ScanRow(BaseModel):
    """해상도 스캔 한 칸 (CSV 한 행)"""
    set_name: str = Field(..., description="집합 표현식")
    p: float = Field(..., description="지수 p", gt=1)
    M: int = Field(..., description="스펙트럼 해상도")
    s: int = Field(..., description="공간 oversampling")
    estimate: Optional[float] = Field(None, description="χ_K multiplier norm 추정치 (실패한 칸은 None)", ge=0)
    restarts: int = Field(..., description="재시작 횟수", ge=0)
    spread: float = Field(0.0, description="재시작 간 상대 편차", ge=0)
    flag: str = Field("", description="non_convergence 등 flag (';' 구분), 실패한 칸은 'error: ...'")
    exit_code: int = Field(0, description="실패한 칸의 종료 코드 (성공 0)", ge=0)


class TrendStatistics(BaseModel):
    """(집합, p) 한 줄의 해상도 추세"""
    set_name: str = Field(..., description="집합 표현식")
    p: float = Field(..., description="지수 p", gt=1)
    resolutions: List[int] = Field(..., description="해상도 M (오름차순)")
    estimates: List[float] = Field(..., description="해상도별 추정치")
    spearman: Optional[float] = Field(None, description="M 과 추정치의 Spearman 상관 (값이 모두 같으면 None)")
    max_min_ratio: float = Field(..., description="max / min 추정치", ge=0)
    strictly_increasing: bool = Field(..., description="해상도에 따라 엄격히 증가하는지")
    extrapolated_limit: Optional[float] = Field(None, description="마지막 세 추정치의 Aitken Δ² 외삽 (증분이 줄 때만)")
    reference: Optional[float] = Field(None, description="연속체 기준값 (정육면체는 (1/sin(π/p))^n)")
    behaviour: str = Field("inconclusive", description="flat / converging / growing / inconclusive")


class ScanReport(BaseModel):
    """해상도 스캔 결과"""
    rows: List[ScanRow] = Field(default_factory=list, description="칸별 결과")
    trends: List[TrendStatistics] = Field(default_factory=list, description="(집합, p)별 추세")


class PoissonCheck(BaseModel):
    """Poisson 항등식 c(k) = f(−k) 와 Parseval 검증"""
    set_name: str = Field(..., description="집합 표현식")
    M: int = Field(..., description="스펙트럼 해상도")
    s: int = Field(..., description="공간 oversampling")
    trials: int = Field(..., description="무작위 field 수", ge=1)
    seed: int = Field(0, description="첫 seed (trial i 는 seed + i)")
    max_coefficient_error: float = Field(..., description="max |c(k) − f(−k)| / max|f|", ge=0)
    max_parseval_error: float = Field(..., description="max |‖f‖₂ − (M^{-n}Σ|F|²)^{1/2}| / ‖f‖₂", ge=0)
    passed: bool = Field(..., description="두 오차 모두 허용오차 이하")
