"""
Experiment Config

Application Layer: 실행 하나의 해석된 설정을 정의합니다.
YAML 설정 파일과 CLI 옵션을 합쳐 계산 전에 한 번에 검증합니다.
"""
import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.core.exceptions import ConfigError
from src.core.profiles import list_profiles
from src.domain.geometry.expression import split_expressions

Command = Literal[
    "tiling",
    "sampling-constant",
    "interpolation-constant",
    "multiplier-norm",
    "equivalence",
    "fefferman",
    "poisson-verify",
    "shannon1d",
]

MIN_RESOLUTION = 4


class ExperimentConfig(BaseModel):
    """실행 설정

    알 수 없는 키는 거부합니다 (오타가 조용히 무시되지 않도록).
    """
    model_config = ConfigDict(extra="forbid")

    command: Command = Field(..., description="실행할 실험")
    sets: List[str] = Field(default_factory=list, description="집합 표현식 목록")
    p: List[float] = Field(default_factory=lambda: [2.0], description="지수 p 목록")
    M: List[int] = Field(default_factory=lambda: [16], description="스펙트럼 해상도 목록")
    s: Optional[int] = Field(None, description="공간 oversampling (None이면 최소 허용값)", ge=1)
    seed: int = Field(0, description="루트 seed", ge=0)
    output: Optional[str] = Field(None, description="결과 디렉토리 (None이면 LAB_OUTPUT_DIR / results)")
    profile: Optional[str] = Field(None, description="최적화 프로파일 (None이면 환경 설정값)")
    workers: Optional[int] = Field(None, description="스캔 worker 수", ge=1)
    duality: bool = Field(False, description="multiplier-norm 에서 p/q 쌍대성 검사도 수행")
    omega: float = Field(1.0, description="Shannon 대역 ω", gt=0)
    h: Optional[float] = Field(None, description="Shannon 샘플 간격 (None이면 π/ω)", gt=0)
    trials: int = Field(100, description="Poisson 검증 field 수", ge=1)

    @field_validator("sets", mode="before")
    @classmethod
    def _split_sets(cls, value: Any) -> Any:
        if isinstance(value, str):
            return split_expressions(value)
        if isinstance(value, list):
            parts: List[str] = []
            for item in value:
                parts.extend(split_expressions(item) if isinstance(item, str) else [item])
            return parts
        return value

    @field_validator("p", "M", mode="before")
    @classmethod
    def _listify(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [v.strip() for v in value.split(",") if v.strip()]
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("p")
    @classmethod
    def _check_exponents(cls, value: List[float]) -> List[float]:
        for p in value:
            if not (1 < p < math.inf):
                raise ValueError(f"p는 1 < p < ∞ 범위여야 합니다: {p}")
        return value

    @field_validator("M")
    @classmethod
    def _check_resolutions(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("M 목록이 비어 있습니다")
        for M in value:
            if M < MIN_RESOLUTION:
                raise ValueError(f"M >= {MIN_RESOLUTION} 이어야 합니다: {M}")
        return value

    @field_validator("profile")
    @classmethod
    def _check_profile(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in list_profiles():
            raise ValueError(f"알 수 없는 프로파일: {value} (가능: {', '.join(list_profiles())})")
        return value

    @model_validator(mode="after")
    def _check_command(self) -> "ExperimentConfig":
        if self.command != "shannon1d" and not self.sets:
            raise ValueError(f"'{self.command}' 에는 집합 표현식(sets)이 필요합니다")
        if self.command == "tiling":
            ordered = sorted(set(self.M))
            if len(ordered) < 2:
                raise ValueError("tiling 판정에는 서로 다른 해상도가 2개 이상 필요합니다")
            self.M = ordered
        return self

    @property
    def shannon_spacing(self) -> float:
        """h (기본 π/ω)"""
        return self.h if self.h is not None else math.pi / self.omega


def load_config(path: Union[str, Path, None] = None, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    설정 파일 + 덮어쓰기 값을 합쳐 검증

    Args:
        path: YAML 파일 (None이면 overrides만 사용)
        overrides: CLI 옵션 (None 값은 무시, 파일 값보다 우선)

    Raises:
        ConfigError: 파일 파싱 실패 또는 검증 실패
    """
    data: Dict[str, Any] = {}
    if path is not None:
        try:
            loaded = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"설정 파일을 읽을 수 없습니다: {path} ({e})") from e
        if loaded is not None and not isinstance(loaded, dict):
            raise ConfigError(f"설정 파일 최상위는 mapping이어야 합니다: {path}")
        data.update(loaded or {})

    data.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"설정 검증 실패:\n{e}") from e
