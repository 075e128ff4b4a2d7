"""
Pytest Configuration and Fixtures

테스트에서 공통으로 사용하는 fixtures를 정의합니다.
해상도는 작게(M=8) 유지해 단위 테스트가 빠르게 끝나도록 합니다.
"""
import pytest


# =============================================================================
# Settings Fixtures
# =============================================================================

@pytest.fixture
def settings(tmp_path, monkeypatch):
    """결과를 임시 디렉토리에 기록하는 설정 fixture"""
    for name in ("LAB_OUTPUT_DIR", "LAB_LOG_LEVEL", "LAB_LOG_FILE", "LAB_WORKERS",
                 "LAB_RESTARTS", "LAB_MAX_ITERATIONS"):
        monkeypatch.delenv(name, raising=False)
    from src.core.config import Settings
    settings = Settings()
    settings.output.output_dir = str(tmp_path)
    return settings


@pytest.fixture
def fast_profile():
    """재시작 2회 프로파일"""
    from src.core.profiles import OptimizerProfile
    return OptimizerProfile(id="test", name="Test", restarts=2, max_iterations=300)


@pytest.fixture
def fast_optimizer(fast_profile):
    """테스트용 PowerMethodOptimizer"""
    from src.domain.optimization.power_method import PowerMethodOptimizer
    return PowerMethodOptimizer(fast_profile)


# =============================================================================
# Set / Raster Fixtures
# =============================================================================

def _raster(expression: str, resolution: int = 8):
    from src.domain.geometry.expression import parse_expression
    from src.domain.geometry.rasterizer import rasterize_covering
    return rasterize_covering(parse_expression(expression), resolution, name=expression)


@pytest.fixture
def cube_raster():
    """[0, 2π]² (한 셀 전체, fundamental domain)"""
    return _raster("cube(0,0;2pi)")


@pytest.fixture
def ball_raster():
    """반지름 π 원판 (겹침 없음, 덮임 실패)"""
    return _raster("ball(0,0;pi)")


@pytest.fixture
def big_ball_raster():
    """반지름 2π 원판 (격자 이동이 겹침)"""
    return _raster("ball(0,0;2pi)")


@pytest.fixture
def counterexample_raster():
    """counterexampleK (모든 잔여류를 정확히 한 번 덮음)"""
    return _raster("counterexampleK")


# =============================================================================
# Field Fixtures
# =============================================================================

@pytest.fixture
def random_field(counterexample_raster):
    """counterexampleK 위의 무작위 대역 제한 field"""
    from src.domain.spectral.generators import random_bandlimited
    return random_bandlimited(7, counterexample_raster)
