"""
vbt 명령행 진입점

    vbt leftassoc --braid "n=2; v1" --tree "(L L)"
    vbt bracket --braid "n=2; s1" --at 1 0
    vbt check-relations --strands 3
    vbt certify-rules [--family f-move]
    vbt dim --leaves 7 --mode classical
    vbt eval Delta --at 1 0
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from vbt_scalars import setup_logging

from .config import Settings, get_settings
from .models import Command, OutputFormat, RunConfig, RunResult
from .service import CliService
from .utils import render_json, render_text

logger = logging.getLogger(__name__)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "text"], default=None,
                        help="출력 형식 (기본: VBT_OUTPUT_FORMAT 또는 json)")
    common.add_argument("--at", nargs=2, type=float, metavar=("RE", "IM"), default=None,
                        help="A = RE + i·IM 에서의 수치 값도 출력")
    common.add_argument("--seed", type=int, default=None, help="무작위 검사 시드")
    common.add_argument("--output", default=None, help="출력 파일 경로")
    common.add_argument("--log-level", default=None, help="로그 수준 (stderr)")
    common.add_argument("--max-workers", type=int, default=None, help="스레드 수")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="vbt", description="가상 땋임 트리 재결합 계산")
    subparsers = parser.add_subparsers(dest="command", help="사용 가능한 명령어")

    leftassoc = subparsers.add_parser("leftassoc", parents=[common], help="땋임 아래 트리를 왼쪽 결합")
    leftassoc.add_argument("--braid", help="땋임 단어, 예: 'n=2; s1 v1'")
    leftassoc.add_argument("--tree", "--shape", dest="tree", help="라벨 트리 또는 모양")
    leftassoc.add_argument("--verify", action="store_true", help="오라클 잔차 검사")

    bracket = subparsers.add_parser("bracket", parents=[common], help="땋임 닫힘의 괄호 다항식")
    bracket.add_argument("--braid", help="땋임 단어")
    bracket.add_argument("--normalize", action="store_true", help="d 로 나눈 값")

    relations = subparsers.add_parser("check-relations", parents=[common], help="VB_n 관계 검사")
    relations.add_argument("--strands", type=int, help="가닥 수 (2..5)")
    relations.add_argument("--samples", type=int, default=0, help="무작위 준동형 검사 개수")

    certify = subparsers.add_parser("certify-rules", parents=[common], help="규칙 인증서")
    certify.add_argument("--family", default=None, help="규칙 계열")

    dim = subparsers.add_parser("dim", parents=[common], help="왼쪽 빗 라벨링 개수")
    dim.add_argument("--leaves", type=int, help="잎 개수")
    dim.add_argument("--mode", default="classical", help="classical | virtual")

    evaluate = subparsers.add_parser("eval", parents=[common], help="상수 또는 Scalar 의 값")
    evaluate.add_argument("expression", help="상수 이름 (d, Delta, c1, ...) 또는 Scalar JSON")
    return parser


def _pick(value, default):
    return default if value is None else value


def to_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """플래그가 설정보다 우선한다"""
    return RunConfig(
        command=Command(args.command),
        braid=getattr(args, "braid", None),
        tree=getattr(args, "tree", None),
        verify=getattr(args, "verify", False),
        normalize=getattr(args, "normalize", False),
        strands=getattr(args, "strands", None),
        samples=getattr(args, "samples", 0),
        family=getattr(args, "family", None),
        leaves=getattr(args, "leaves", None),
        mode=getattr(args, "mode", "classical"),
        expression=getattr(args, "expression", None),
        output_format=OutputFormat(_pick(args.output_format, settings.output_format)),
        at=tuple(args.at) if args.at is not None else None,
        seed=_pick(args.seed, settings.seed),
        output=args.output,
        max_workers=_pick(args.max_workers, settings.max_workers),
        precision=settings.at_precision,
    )


def render(result: RunResult, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.TEXT:
        return render_text(result.payload)
    return render_json(result.payload)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.command:
        parser.print_help()
        return 2
    settings = get_settings()
    setup_logging(_pick(args.log_level, settings.log_level))
    config = to_config(args, settings)
    result = CliService().run(config)
    text = render(result, config.output_format)
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
        logger.info("wrote %s", config.output)
    else:
        sys.stdout.write(text)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
