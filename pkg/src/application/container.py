"""
Lab Application Container

Application Layer: DI Container 역할을 하는 메인 애플리케이션 클래스
설정, 최적화기, 러너, 결과 기록기를 조합하여 실험 명령을 실행합니다.

조립 순서:
1. Infrastructure Layer (결과 기록, 병렬 실행)
2. Evaluation Layer (스캔 / 검증 러너)
3. 명령별 유스케이스 (Domain 함수 호출 + 결과 기록)
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List

from dotenv import load_dotenv

from src.application.state import ExperimentConfig
from src.core import Settings
from src.core.exceptions import (
    EXIT_CONFIG_ERROR,
    EXIT_NON_CONVERGENCE,
    EXIT_OK,
    EXIT_PRECONDITION,
    ConfigError,
    LabError,
    NoWitnessError,
    PreconditionError,
    SubNyquistError,
)
from src.core.logging import get_logger, setup_logging
from src.core.profiles import OptimizerProfile, get_profile
from src.domain.entities.field import TorusModel
from src.domain.entities.models import ConstantEstimate
from src.domain.entities.multiplier import MultiplierSpec
from src.domain.geometry.expression import parse_expression
from src.domain.geometry.rasterizer import rasterize_covering
from src.domain.geometry.tiling import classify_tiling
from src.domain.multiplier.equivalence import equivalence_experiment
from src.domain.multiplier.norms import estimate_multiplier_norm, multiplier_duality_check
from src.domain.optimization.power_method import PowerMethodOptimizer
from src.domain.sampling.constants import estimate_interpolation_constant, estimate_sampling_constant
from src.domain.sampling.lattice import sample_lattice
from src.domain.sampling.shannon import shannon_1d, shannon_aliasing_witness
from src.domain.spectral.norms import lp_norm, lp_norm_samples
from src.evaluation.runner import ExperimentRunner
from src.infrastructure.artifact_writer import ArtifactWriter
from src.infrastructure.scan_executor import ScanExecutor

logger = get_logger(__name__)

ESTIMATE_COLUMNS = [
    "set_name", "kind", "p", "M", "s", "value", "restarts", "spread",
    "quadrature_error", "converged", "flags", "restricted_value",
]
SCAN_COLUMNS = ["set_name", "p", "M", "s", "estimate", "restarts", "spread", "flag"]
TILING_COLUMNS = ["set_name", "verdict", "resolutions", "max_overlap", "gap", "boundary_bound"]


@dataclass
class RunOutcome:
    """실행 결과 (종료 코드 + 기록한 파일)"""
    exit_code: int
    artifacts: List[Path] = field(default_factory=list)
    message: str = ""


def _estimate_row(estimate: ConstantEstimate) -> Dict:
    row = estimate.model_dump(mode="json")
    row["spread"] = estimate.spread
    row["flags"] = ";".join(estimate.flags)
    return row


class LabApplication:
    """Lab 애플리케이션 (DI Container)

    명령 이름 → 유스케이스 메서드 매핑을 관리합니다.
    테스트에서는 settings / writer 를 주입해 임시 디렉토리에 기록합니다.
    """

    def __init__(self, settings: Settings = None):
        self.settings = settings or Settings()
        self._commands: Dict[str, Callable[[ExperimentConfig, ArtifactWriter], RunOutcome]] = {
            "tiling": self._tiling,
            "sampling-constant": self._sampling_constant,
            "interpolation-constant": self._interpolation_constant,
            "multiplier-norm": self._multiplier_norm,
            "equivalence": self._equivalence,
            "fefferman": self._fefferman,
            "poisson-verify": self._poisson_verify,
            "shannon1d": self._shannon1d,
        }

    # ============ Assembly ============

    def optimizer(self, config: ExperimentConfig) -> PowerMethodOptimizer:
        """config.profile 이 없으면 환경 설정(LAB_RESTARTS 등)으로 만든 프로파일"""
        if config.profile is not None:
            return PowerMethodOptimizer(get_profile(config.profile))
        opt = self.settings.optimizer
        return PowerMethodOptimizer(OptimizerProfile(
            id="settings",
            name="Settings",
            description="환경 설정값",
            restarts=opt.restarts,
            probes=opt.probes,
            max_iterations=opt.max_iterations,
            tolerance=opt.tolerance,
            patience=opt.patience,
        ))

    def writer(self, config: ExperimentConfig) -> ArtifactWriter:
        return ArtifactWriter(self.settings, config.output)

    def _raster(self, expression: str, M: int):
        return rasterize_covering(parse_expression(expression), M, name=expression)

    # ============ Lifecycle ============

    def run(self, config: ExperimentConfig) -> RunOutcome:
        """
        명령 실행

        Returns:
            RunOutcome (0 성공, 2 설정 오류, 3 전제 조건 위반, 4 최적화 미수렴)
        """
        logger.info("[Run] command=%s sets=%s p=%s M=%s seed=%d",
                    config.command, config.sets, config.p, config.M, config.seed)
        try:
            return self._commands[config.command](config, self.writer(config))
        except ConfigError as e:
            logger.error("[Run] 설정 오류: %s", e)
            return RunOutcome(EXIT_CONFIG_ERROR, message=str(e))
        except PreconditionError as e:
            logger.error("[Run] 전제 조건 위반: %s", e)
            return RunOutcome(EXIT_PRECONDITION, getattr(e, "artifacts", []), message=str(e))
        except LabError as e:
            logger.error("[Run] %s", e)
            return RunOutcome(e.exit_code, message=str(e))

    def _config_dict(self, config: ExperimentConfig) -> Dict:
        return config.model_dump(mode="json")

    def _estimates_outcome(
        self, config: ExperimentConfig, writer: ArtifactWriter, estimates: List[ConstantEstimate],
    ) -> RunOutcome:
        path = writer.write_csv(f"{config.command}.csv", [_estimate_row(e) for e in estimates],
                                ESTIMATE_COLUMNS, self._config_dict(config))
        if all(e.converged for e in estimates):
            return RunOutcome(EXIT_OK, [path])
        return RunOutcome(EXIT_NON_CONVERGENCE, [path], message="일부 추정이 수렴하지 않았습니다")

    # ============ Commands ============

    def _tiling(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        reports = [
            classify_tiling(parse_expression(expression), config.M, self.settings.geometry, name=expression)
            for expression in config.sets
        ]
        rows = [{
            "set_name": r.set_name,
            "verdict": r.verdict,
            "resolutions": " ".join(str(M) for M in r.resolutions),
            "max_overlap": r.max_overlap,
            "gap": r.gap.measures[-1],
            "boundary_bound": r.boundary_bound,
        } for r in reports]
        config_dict = self._config_dict(config)
        return RunOutcome(EXIT_OK, [
            writer.write_csv("tiling.csv", rows, TILING_COLUMNS, config_dict),
            writer.write_json("tiling.json", reports, config_dict),
        ])

    def _sampling_constant(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        optimizer = self.optimizer(config)
        estimates = []
        for expression in config.sets:
            for M in config.M:
                raster = self._raster(expression, M)
                model = TorusModel.for_raster(raster, config.s)
                for p in config.p:
                    estimates.append(estimate_sampling_constant(raster, p, model, optimizer, config.seed))
        return self._estimates_outcome(config, writer, estimates)

    def _interpolation_constant(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        optimizer = self.optimizer(config)
        estimates = []
        for expression in config.sets:
            for M in config.M:
                raster = self._raster(expression, M)
                model = TorusModel.for_raster(raster, config.s)
                for p in config.p:
                    estimates.append(estimate_interpolation_constant(raster, p, model, optimizer, config.seed))
        return self._estimates_outcome(config, writer, estimates)

    def _multiplier_norm(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        optimizer = self.optimizer(config)
        estimates, dualities = [], []
        for expression in config.sets:
            for M in config.M:
                raster = self._raster(expression, M)
                model = TorusModel.for_raster(raster, config.s)
                multiplier = MultiplierSpec.from_raster(raster)
                for p in config.p:
                    estimates.append(estimate_multiplier_norm(multiplier, p, model, optimizer, config.seed))
                    if config.duality:
                        dualities.append(multiplier_duality_check(multiplier, p, model, optimizer, config.seed))
        outcome = self._estimates_outcome(config, writer, estimates)
        if dualities:
            outcome.artifacts.append(
                writer.write_json("multiplier-duality.json", dualities, self._config_dict(config))
            )
        return outcome

    def _equivalence(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        optimizer = self.optimizer(config)
        reports = [
            equivalence_experiment(parse_expression(expression), p, M, config.s, optimizer, config.seed,
                                   self.settings.geometry, name=expression)
            for expression in config.sets
            for M in config.M
            for p in config.p
        ]
        path = writer.write_json("equivalence.json", reports, self._config_dict(config))
        converged = all(
            e.converged
            for r in reports
            for e in (r.sampling, r.interpolation, r.conjugate_sampling, r.multiplier)
        )
        return RunOutcome(EXIT_OK if converged else EXIT_NON_CONVERGENCE, [path])

    def _fefferman(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        runner = ExperimentRunner(self.settings, ScanExecutor(self.settings, config.workers))
        report = runner.fefferman_scan(
            config.sets, config.p, config.M, config.seed, config.s, config.profile or "default",
        )
        config_dict = self._config_dict(config)
        artifacts = [
            writer.write_csv("fefferman.csv", report.rows, SCAN_COLUMNS, config_dict),
            writer.write_json("fefferman-trends.json", report.trends, config_dict),
        ]
        failed = [row for row in report.rows if row.estimate is None]
        if failed:
            return RunOutcome(max(row.exit_code for row in failed), artifacts,
                              message=f"{len(failed)}개 칸이 실패했습니다: {failed[0].flag}")
        if any("non_convergence" in row.flag for row in report.rows):
            return RunOutcome(EXIT_NON_CONVERGENCE, artifacts, message="일부 칸이 수렴하지 않았습니다")
        return RunOutcome(EXIT_OK, artifacts)

    def _poisson_verify(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        runner = ExperimentRunner(self.settings)
        checks = [
            runner.poisson_verify(expression, M, config.trials, config.seed, config.s)
            for expression in config.sets
            for M in config.M
        ]
        path = writer.write_json("poisson-verify.json", checks, self._config_dict(config))
        if all(c.passed for c in checks):
            return RunOutcome(EXIT_OK, [path])
        return RunOutcome(1, [path], message="Poisson / Parseval 항등식 검증 실패")

    def _shannon1d(self, config: ExperimentConfig, writer: ArtifactWriter) -> RunOutcome:
        h = config.shannon_spacing
        config_dict = self._config_dict(config)
        reports = []
        try:
            for M in config.M:
                reports.append(shannon_1d(config.omega, h, M, config.seed))
        except SubNyquistError as e:
            summary = {"omega": config.omega, "h": h, "M": config.M[0]}
            try:
                witness = shannon_aliasing_witness(config.omega, h, config.M[0])
                summary["witness_norm"] = lp_norm(witness, 2)
                summary["witness_sample_norm"] = lp_norm_samples(sample_lattice(witness), 2)
            except NoWitnessError as missing:
                # 겹침 구간이 격자 간격보다 좁음
                summary["witness_norm"] = None
                summary["witness_sample_norm"] = None
                summary["witness_error"] = str(missing)
            e.artifacts = [writer.write_json("shannon1d-aliasing.json", summary, config_dict)]
            raise
        return RunOutcome(EXIT_OK, [writer.write_json("shannon1d.json", reports, config_dict)])


def create_app(settings: Settings = None) -> LabApplication:
    """애플리케이션 팩토리"""
    load_dotenv()
    settings = settings or Settings()
    setup_logging(settings.output.log_level, log_file=settings.output.log_file)
    return LabApplication(settings)
