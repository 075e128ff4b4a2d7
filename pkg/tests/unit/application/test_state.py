"""
Experiment Config Unit Tests

CLI 값 파싱, 검증, YAML 병합 테스트
"""
import math

import pytest

from src.application.state import ExperimentConfig, load_config
from src.core.exceptions import ConfigError


class TestExperimentConfig:
    """ExperimentConfig 검증 테스트"""

    def test_comma_lists(self):
        config = load_config(overrides={
            "command": "fefferman", "sets": "ball(0,0;pi),cube(0,0;2pi)", "p": "3,4", "M": "8,16",
        })

        assert config.sets == ["ball(0,0;pi)", "cube(0,0;2pi)"]
        assert config.p == [3.0, 4.0]
        assert config.M == [8, 16]

    def test_repeated_sets_are_split(self):
        config = load_config(overrides={"command": "tiling", "sets": ["counterexampleK", "ball(0,0;pi),ball(0,0;2pi)"],
                                        "M": "8,16"})

        assert config.sets == ["counterexampleK", "ball(0,0;pi)", "ball(0,0;2pi)"]

    def test_tiling_sorts_resolutions(self):
        config = load_config(overrides={"command": "tiling", "sets": "counterexampleK", "M": "32,8,16,8"})

        assert config.M == [8, 16, 32]

    def test_tiling_needs_two_resolutions(self):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "tiling", "sets": "counterexampleK", "M": "8"})

    @pytest.mark.parametrize("p", ["1", "1.0", "0.5"])
    def test_exponent_range(self, p):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "sampling-constant", "sets": "counterexampleK", "p": p})

    def test_small_resolution_rejected(self):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "sampling-constant", "sets": "counterexampleK", "M": "2"})

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "fefferman", "sets": "counterexampleK", "restart": 3})

    def test_sets_required(self):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "fefferman"})

    def test_shannon_without_sets(self):
        config = load_config(overrides={"command": "shannon1d", "omega": 2.0})

        assert config.sets == []
        assert config.shannon_spacing == pytest.approx(math.pi / 2)

    def test_explicit_spacing(self):
        config = ExperimentConfig(command="shannon1d", h=0.5)

        assert config.shannon_spacing == 0.5

    def test_unknown_profile(self):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "fefferman", "sets": "counterexampleK", "profile": "huge"})

    def test_unbalanced_expression_list(self):
        with pytest.raises(ConfigError):
            load_config(overrides={"command": "fefferman", "sets": "ball(0,0;pi"})

    def test_none_overrides_ignored(self):
        config = load_config(overrides={"command": "fefferman", "sets": "counterexampleK", "seed": None})

        assert config.seed == 0


class TestLoadConfigFile:
    """YAML 설정 파일 테스트"""

    def test_yaml_with_overrides(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text(
            "command: fefferman\n"
            "sets:\n  - ball(0,0;pi)\n  - counterexampleK\n"
            "p: [3, 4]\n"
            "M: [8, 16]\n"
            "seed: 3\n",
            encoding="utf-8",
        )

        config = load_config(path, {"seed": 11, "M": "8"})

        assert config.sets == ["ball(0,0;pi)", "counterexampleK"]
        assert config.p == [3.0, 4.0]
        assert config.M == [8]
        assert config.seed == 11

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("command: [fefferman\n", encoding="utf-8")

        with pytest.raises(ConfigError):
            load_config(path)

    def test_top_level_must_be_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- fefferman\n", encoding="utf-8")

        with pytest.raises(ConfigError):
            load_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "absent.yaml")
