"""
Lab CLI

Presentation Layer: 실험 명령줄 인터페이스 (click)

명령:
- tiling: 격자 이동 겹침 / 덮임 판정
- sampling-constant / interpolation-constant: 안정 샘플링 / 보간 상수 추정
- multiplier-norm: χ_K multiplier 의 𝓕L^p norm 추정
- equivalence: sampling 상수와 periodized multiplier norm 비교
- fefferman: 해상도 스캔 추세
- poisson-verify: c(k) = f(−k) / Parseval 검증
- shannon1d: 1차원 Shannon 등거리 검사

종료 코드: 0 성공, 2 설정 오류, 3 전제 조건 위반, 4 최적화 미수렴
"""
import click

from src.application.container import create_app
from src.application.state import load_config
from src.core.exceptions import EXIT_CONFIG_ERROR, ConfigError
from src.core.profiles import list_profiles

COMMON_OPTIONS = [
    click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                 help="YAML 설정 파일 (명령줄 옵션이 파일 값보다 우선)"),
    click.option("--set", "--sets", "sets",
                 help="집합 표현식. 최상위 쉼표로 여러 개 (예: \"cube(0,0;2pi), ball(0,0;pi)\")"),
    click.option("--p", "p", help="지수 p 목록, 쉼표 구분 (1 < p < ∞)"),
    click.option("--M", "resolutions", help="스펙트럼 해상도 M 목록, 쉼표 구분 (M ≥ 4)"),
    click.option("--s", "s", type=int, help="공간 oversampling (기본: 최소 허용값)"),
    click.option("--seed", type=int, help="루트 seed"),
    click.option("--output", type=click.Path(file_okay=False), help="결과 디렉토리"),
    click.option("--profile", type=click.Choice(list_profiles()), help="최적화 프로파일"),
]


@click.group()
def cli():
    """격자 타일링 · 안정 샘플링 · χ_K multiplier 수치 실험 Lab"""


def _execute(ctx: click.Context, command: str, config_path=None, resolutions=None, **options) -> None:
    overrides = {"command": command, "M": resolutions, **options}
    try:
        config = load_config(config_path, overrides)
    except ConfigError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_CONFIG_ERROR)

    outcome = create_app().run(config)
    for path in outcome.artifacts:
        click.echo(str(path))
    if outcome.message:
        click.echo(outcome.message, err=True)
    ctx.exit(outcome.exit_code)


def _register(name: str, help_text: str, *extra_options) -> click.Command:
    """공통 옵션 + 명령별 옵션으로 하위 명령 등록"""

    @click.pass_context
    def callback(ctx, **options):
        _execute(ctx, name, **options)

    for option in reversed([*COMMON_OPTIONS, *extra_options]):
        callback = option(callback)
    return cli.command(name=name, help=help_text)(callback)


_register(
    "tiling",
    "K 와 그 2πℤⁿ 이동들의 겹침 측도와 한 셀의 미덮임 측도를 해상도 수열로 계산해 "
    "K 가 fundamental domain 인지 판정합니다. M 은 서로 다른 값 2개 이상."
    "\n\n근거: 격자 타일링 (K 가 2πℤⁿ 의 fundamental domain 일 조건).",
)
_register(
    "sampling-constant",
    "‖f‖_p ≤ C‖(f(k))‖_{ℓ^p} (supp f̂ ⊂ K) 의 최적 상수 C 를 power method 로 아래에서 추정합니다. "
    "격자 이동이 겹치면 샘플이 0인 field 로 aliasing 을 보고합니다."
    "\n\n근거: Plancherel–Pólya 부등식, 정수 격자 위의 안정 샘플링.",
)
_register(
    "interpolation-constant",
    "χ_K 사영 후 정수 격자 샘플링의 L^p → ℓ^p norm 과, 최소 노름 보간 함수로 제한한 값을 추정합니다. "
    "격자 이동들이 한 셀을 덮지 않으면 실패합니다."
    "\n\n근거: ℓ^p 자료의 대역 제한 보간과 샘플링 상수의 쌍대성.",
)
_register(
    "multiplier-norm",
    "F ↦ χ_K F 의 𝓕L^p → 𝓕L^p norm 을 추정합니다. --duality 로 쌍대 지수 q 쪽과의 일치도 검사합니다."
    "\n\n근거: Fourier multiplier 의 p ↔ q 쌍대성.",
    click.option("--duality/--no-duality", default=None, help="p / q 쌍대성 검사"),
)
_register(
    "equivalence",
    "fundamental domain K 에서 샘플링 상수, G ↦ χ_K G 의 𝓕ℓ^p → 𝓕L^p norm, 보간 상수를 같은 해상도와 "
    "같은 재시작으로 계산해 일치 여부를 보고합니다. K 가 fundamental domain 이 아니면 거부합니다."
    "\n\n근거: fundamental domain 에서 안정 샘플링 ⇔ 안정 보간 ⇔ χ_K 주기화 multiplier 유계.",
)
_register(
    "fefferman",
    "(집합, p, M) 격자 전체에서 χ_K multiplier norm 을 추정해 해상도에 따른 추세(Spearman, max/min)를 "
    "기록합니다. 공의 indicator 는 p ≠ 2 에서 해상도와 함께 커지고, 정육면체는 p = 2 에서 평탄하며 "
    "p ≠ 2 에서는 연속체 기준값 (1/sin(π/p))^n 아래로 수렴합니다."
    "\n\n근거: Fefferman 의 ball multiplier 정리.",
    click.option("--workers", type=int, help="병렬 worker 수 (1이면 직렬)"),
)
_register(
    "poisson-verify",
    "무작위 대역 제한 field 에 대해 주기화 계수 c(k) 와 샘플 f(−k) 의 일치, Parseval 항등식을 검증합니다."
    "\n\n근거: Poisson 합 공식과 Parseval 항등식.",
    click.option("--trials", type=int, help="무작위 field 수"),
)
_register(
    "shannon1d",
    "supp f̂ ⊂ [−ω, ω] 인 1차원 field 에서 f ↦ √h·f(kh) 가 L² 등거리인지 검사합니다. "
    "h > π/ω 이면 오류와 함께 샘플이 0인 aliasing field 를 기록합니다."
    "\n\n근거: Shannon 샘플링 정리 (h ≤ π/ω 에서 √h·샘플링은 등거리).",
    click.option("--omega", type=float, help="대역 ω"),
    click.option("--h", "h", type=float, help="샘플 간격 (기본 π/ω)"),
)


if __name__ == "__main__":
    cli()
