"""
명령행 데이터 모델
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, Field


class Command(str, Enum):
    LEFTASSOC = "leftassoc"
    BRACKET = "bracket"
    CHECK_RELATIONS = "check-relations"
    CERTIFY_RULES = "certify-rules"
    DIM = "dim"
    EVAL = "eval"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class RunConfig(BaseModel):
    """명령 하나의 실행 설정 (플래그와 환경 설정을 합친 결과)"""

    command: Command = Field(..., description="실행할 명령")
    braid: Optional[str] = Field(None, description="땋임 단어 텍스트")
    tree: Optional[str] = Field(None, description="라벨 트리 또는 모양 텍스트")
    verify: bool = Field(False, description="오라클 잔차 검사 여부")
    normalize: bool = Field(False, description="괄호 값을 d 로 나눌지")
    strands: Optional[int] = Field(None, description="관계 검사 가닥 수")
    samples: int = Field(0, ge=0, description="무작위 준동형 검사 개수")
    family: Optional[str] = Field(None, description="인증할 규칙 계열")
    leaves: Optional[int] = Field(None, description="잎 개수")
    mode: str = Field("classical", description="융합 규칙 집합")
    expression: Optional[str] = Field(None, description="상수 이름 또는 Scalar 직렬화")
    output_format: OutputFormat = Field(OutputFormat.JSON, description="출력 형식")
    at: Optional[Tuple[float, float]] = Field(None, description="수치 대입 A = re + i·im")
    seed: int = Field(0, description="무작위 검사 시드")
    output: Optional[str] = Field(None, description="출력 파일 경로")
    max_workers: int = Field(4, ge=1, description="스레드 수")
    precision: int = Field(12, ge=1, description="수치 값 소수 자릿수")

    @property
    def at_value(self) -> Optional[complex]:
        return complex(*self.at) if self.at is not None else None


class RunResult(BaseModel):
    """종료 코드와 직렬화할 내용"""

    status: int = Field(0, description="0 성공, 1 도메인 오류, 2 사용법 오류")
    payload: Dict[str, Any] = Field(default_factory=dict)
