"""
Optimizer Profiles

Power Method 최적화기의 재시작/반복/수렴 설정 조합을 정의하는 프로파일

사용 목적:
- 빠른 smoke 실행: 재시작 수와 반복 수를 줄여 CLI/테스트 속도 확보
- 기본 실험: 8회 재시작, 1e-8 상대 개선 기준
- 정밀 실험: 재시작과 probe를 늘려 lower bound를 끌어올림
"""

from dataclasses import dataclass
from typing import Dict, List


@dataclass
class OptimizerProfile:
    """최적화 프로파일 정의"""

    # 식별자
    id: str
    name: str
    description: str = ""

    # 재시작 설정
    restarts: int = 8
    probes: int = 0  # 무작위 probe 수 (최대 ratio를 warm start로 추가)

    # 반복 / 수렴 설정
    max_iterations: int = 500
    tolerance: float = 1e-8
    patience: int = 10

    def __post_init__(self):
        """유효성 검사"""
        if self.restarts < 1:
            raise ValueError(f"restarts ({self.restarts}) must be >= 1")
        if self.max_iterations < self.patience:
            raise ValueError(
                f"max_iterations ({self.max_iterations}) cannot be smaller than "
                f"patience ({self.patience})"
            )
        if not 0 < self.tolerance < 1:
            raise ValueError(f"tolerance ({self.tolerance}) must lie in (0, 1)")
        if self.probes < 0:
            raise ValueError(f"probes ({self.probes}) must be >= 0")


# 사전 정의된 프로파일들
PROFILES: Dict[str, OptimizerProfile] = {
    # Fast: 테스트/smoke 실행용
    "fast": OptimizerProfile(
        id="fast",
        name="Fast",
        description="재시작 3회, 최대 200회 반복. 테스트와 빠른 확인용.",
        restarts=3,
        max_iterations=200,
    ),

    # Default: 기본 실험 설정
    "default": OptimizerProfile(
        id="default",
        name="Default",
        description="재시작 8회, 1e-8 상대 개선이 10회 연속 없으면 수렴.",
    ),

    # Thorough: 재시작과 probe를 늘린 정밀 실행
    "thorough": OptimizerProfile(
        id="thorough",
        name="Thorough",
        description="재시작 16회 + 무작위 probe 2000개, 최대 2000회 반복.",
        restarts=16,
        probes=2000,
        max_iterations=2000,
    ),
}


def get_profile(profile_id: str) -> OptimizerProfile:
    """
    프로파일 ID로 프로파일 조회

    Args:
        profile_id: 프로파일 ID

    Returns:
        OptimizerProfile

    Raises:
        ValueError: 존재하지 않는 프로파일 ID
    """
    if profile_id not in PROFILES:
        available = ", ".join(PROFILES.keys())
        raise ValueError(f"Unknown profile: {profile_id}. Available: {available}")
    return PROFILES[profile_id]


def list_profiles() -> List[str]:
    """사용 가능한 프로파일 ID 목록"""
    return list(PROFILES.keys())


def get_profile_summary(profile_id: str) -> str:
    """프로파일 요약 문자열 (CLI help / 로그 출력용)"""
    profile = get_profile(profile_id)
    return (
        f"{profile.name}: restarts={profile.restarts}, probes={profile.probes}, "
        f"max_iterations={profile.max_iterations}, tolerance={profile.tolerance:g}"
    )
