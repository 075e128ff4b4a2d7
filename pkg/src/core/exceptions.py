"""
Lab Exceptions

Cross-cutting concern: 레이어 공통 예외 계층과 CLI 종료 코드

- ConfigError 계열 → exit 2 (설정/입력 오류)
- PreconditionError 계열 → exit 3 (수학적 전제 조건 위반)
- 최적화 미수렴은 예외가 아니라 ConstantEstimate의 flag로 전달 → exit 4
"""

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_NON_CONVERGENCE = 4


class LabError(Exception):
    """Lab 공통 예외"""
    exit_code = 1


# =============================================================================
# Config Errors (exit 2)
# =============================================================================

class ConfigError(LabError, ValueError):
    """설정 또는 입력값 오류"""
    exit_code = EXIT_CONFIG_ERROR


class ExpressionSyntaxError(ConfigError):
    """집합 표현식 파싱 오류 (위치 포함)"""

    def __init__(self, message: str, expression: str, position: int):
        self.expression = expression
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} (position {position})\n  {expression}\n  {pointer}")


class ExponentError(ConfigError):
    """p가 (1, ∞) 범위를 벗어남"""


class GridMismatchError(ConfigError):
    """격자/모델 크기 불일치"""


# =============================================================================
# Precondition Errors (exit 3)
# =============================================================================

class PreconditionError(LabError):
    """연산의 수학적 전제 조건 위반"""
    exit_code = EXIT_PRECONDITION


class BoxTooSmallError(PreconditionError):
    """격자 박스가 집합의 bounding box를 덮지 못함"""

    def __init__(self, primitive: str, message: str):
        self.primitive = primitive
        super().__init__(message)


class EmptySpectrumError(PreconditionError):
    """마스크가 비어 있음"""


class CoverageViolationError(PreconditionError):
    """격자 이동들이 한 셀을 덮지 못함 (보간 불가능)"""


class DilatedOverlapError(PreconditionError):
    """bump 지지집합의 격자 이동들이 서로 겹침 (재구성 불가능)"""


class NoWitnessError(PreconditionError):
    """겹침 영역에 내부가 없어 aliasing witness를 만들 수 없음"""


class SubNyquistError(PreconditionError):
    """1D 샘플 간격 h가 π/ω보다 큼"""


class NotFundamentalDomainError(PreconditionError):
    """기본 영역(fundamental domain) 판정이 아님"""
