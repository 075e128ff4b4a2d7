"""
LabApplication Unit Tests

명령별 종료 코드와 결과 파일 테스트
"""
import csv
import json
import math

import pytest

from src.application.container import LabApplication
from src.application.state import load_config
from src.core.exceptions import EXIT_CONFIG_ERROR, EXIT_NON_CONVERGENCE, EXIT_OK, EXIT_PRECONDITION
from src.infrastructure.artifact_writer import read_embedded_config


@pytest.fixture
def app(settings):
    return LabApplication(settings)


def _config(**overrides):
    return load_config(overrides=overrides)


class TestCommands:
    """명령 실행 테스트"""

    def test_tiling(self, app, tmp_path):
        outcome = app.run(_config(command="tiling", sets="counterexampleK,ball(0,0;2pi)", M="8,16"))

        assert outcome.exit_code == EXIT_OK
        assert {p.name for p in outcome.artifacts} == {"tiling.csv", "tiling.json"}
        payload = json.loads((tmp_path / "tiling.json").read_text(encoding="utf-8"))
        assert [r["verdict"] for r in payload["result"]] == ["fundamental", "overlap_violation"]
        assert read_embedded_config(tmp_path / "tiling.csv")["command"] == "tiling"

    def test_sampling_constant(self, app, tmp_path):
        outcome = app.run(_config(command="sampling-constant", sets="counterexampleK", p="2", M="8",
                                  profile="fast"))

        assert outcome.exit_code == EXIT_OK
        lines = (tmp_path / "sampling-constant.csv").read_text(encoding="utf-8").splitlines()
        assert lines[3].startswith("set_name,kind,p,M,s,value")
        assert lines[-1] == "# complete: rows=1"

    def test_interpolation_requires_coverage(self, app):
        outcome = app.run(_config(command="interpolation-constant", sets="ball(0,0;pi)", p="3", M="8",
                                  profile="fast"))

        assert outcome.exit_code == EXIT_PRECONDITION

    def test_equivalence_requires_fundamental_domain(self, app):
        outcome = app.run(_config(command="equivalence", sets="ball(0,0;pi)", p="2", M="8", profile="fast"))

        assert outcome.exit_code == EXIT_PRECONDITION

    def test_poisson_verify(self, app, tmp_path):
        outcome = app.run(_config(command="poisson-verify", sets="cube(0,0;2pi)", M="8", trials=2))

        assert outcome.exit_code == EXIT_OK
        payload = json.loads((tmp_path / "poisson-verify.json").read_text(encoding="utf-8"))
        assert payload["result"][0]["passed"] is True

    def test_shannon_isometry(self, app, tmp_path):
        outcome = app.run(_config(command="shannon1d", omega=1.0, M="32"))

        assert outcome.exit_code == EXIT_OK
        assert (tmp_path / "shannon1d.json").exists()

    def test_shannon_sub_nyquist_writes_witness(self, app, tmp_path):
        outcome = app.run(_config(command="shannon1d", omega=1.0, h=4.0, M="32"))

        assert outcome.exit_code == EXIT_PRECONDITION
        payload = json.loads((tmp_path / "shannon1d-aliasing.json").read_text(encoding="utf-8"))
        assert payload["result"]["witness_norm"] > 0
        assert payload["result"]["witness_sample_norm"] <= 1e-10 * payload["result"]["witness_norm"]

    def test_shannon_without_witness_still_writes_summary(self, app, tmp_path):
        """겹침이 격자 간격보다 좁아 witness 가 없어도 요약 파일은 남음"""
        outcome = app.run(_config(command="shannon1d", omega=1.0, h=1.001 * math.pi, M="32"))

        assert outcome.exit_code == EXIT_PRECONDITION
        assert [p.name for p in outcome.artifacts] == ["shannon1d-aliasing.json"]
        payload = json.loads((tmp_path / "shannon1d-aliasing.json").read_text(encoding="utf-8"))
        assert payload["result"]["witness_norm"] is None
        assert "witness_error" in payload["result"]

    def test_fefferman_records_failed_cell(self, app, tmp_path):
        """s = 3 은 정육면체의 quadrature 하한 미만 → 그 칸만 실패, 공은 계속"""
        outcome = app.run(_config(command="fefferman", sets="cube(0,0;2pi),ball(0,0;pi)", p="2", M="8",
                                  s=3, profile="fast", workers=1))

        assert outcome.exit_code == EXIT_CONFIG_ERROR
        lines = (tmp_path / "fefferman.csv").read_text(encoding="utf-8").splitlines()
        assert lines[-1] == "# complete: rows=2"
        rows = list(csv.DictReader(line for line in lines if not line.startswith("#")))
        assert rows[0]["set_name"] == "cube(0,0;2pi)"
        assert rows[0]["estimate"] == ""
        assert rows[0]["flag"].startswith("error: ")
        assert rows[1]["set_name"] == "ball(0,0;pi)"
        assert float(rows[1]["estimate"]) == pytest.approx(1.0, rel=1e-9)

    def test_unparsable_set_is_config_error(self, app):
        outcome = app.run(_config(command="tiling", sets="disk(0,0;pi)", M="8,16"))

        assert outcome.exit_code == EXIT_CONFIG_ERROR


class TestNonConvergence:
    """최적화 미수렴 → 종료 코드 4, 결과는 기록"""

    def test_exit_code_and_artifact(self, settings, tmp_path):
        settings.optimizer.max_iterations = 10
        settings.optimizer.patience = 10
        settings.optimizer.tolerance = 1e-300
        app = LabApplication(settings)

        outcome = app.run(_config(command="sampling-constant", sets="cube(0,0;2pi)", p="3", M="8"))

        assert outcome.exit_code == EXIT_NON_CONVERGENCE
        assert (tmp_path / "sampling-constant.csv").exists()


class TestOptimizerAssembly:
    """프로파일 / 환경 설정 선택"""

    def test_profile_wins(self, app):
        optimizer = app.optimizer(_config(command="fefferman", sets="counterexampleK", profile="thorough"))

        assert optimizer.profile.restarts == 16

    def test_settings_profile(self, settings):
        settings.optimizer.restarts = 5
        optimizer = LabApplication(settings).optimizer(_config(command="fefferman", sets="counterexampleK"))

        assert optimizer.profile.restarts == 5
