"""
vbt-cli

재결합 엔진, 땋임 표현, 관계 검사, 규칙 인증, 차원 계산과 상수 평가를
하나의 `vbt` 명령으로 묶는 명령행 모듈입니다.
"""

from .config import Settings, get_settings
from .exceptions import CliDomainError, CliException, CliUsageError
from .main import build_parser, main
from .models import Command, OutputFormat, RunConfig, RunResult
from .service import CliService
from .utils import render_json, render_text, scalar_from_payload, scalar_payload, vector_from_payload, vector_payload

__version__ = "1.0.0"

__all__ = [
    # Entry point
    "main",
    "build_parser",
    "CliService",

    # Config
    "Settings",
    "get_settings",

    # Models
    "Command",
    "OutputFormat",
    "RunConfig",
    "RunResult",

    # Serialization
    "scalar_payload",
    "scalar_from_payload",
    "vector_payload",
    "vector_from_payload",
    "render_json",
    "render_text",

    # Exceptions
    "CliException",
    "CliDomainError",
    "CliUsageError",
]
