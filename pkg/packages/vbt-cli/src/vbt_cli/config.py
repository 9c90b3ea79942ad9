"""
환경 설정

VBT_ 접두사의 환경 변수로 기본값을 바꿀 수 있으며, 명령행 플래그가 항상 우선합니다.
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """vbt 명령행 설정"""

    model_config = SettingsConfigDict(env_prefix="VBT_", env_file=".env", extra="ignore")

    output_format: Literal["json", "text"] = Field("json", description="출력 형식")
    log_level: str = Field("WARNING", description="로그 수준 (stderr)")
    seed: int = Field(0, description="무작위 검사의 시드")
    max_workers: int = Field(4, ge=1, description="규칙 인증/작용 행렬 스레드 수")
    at_precision: int = Field(12, ge=1, description="수치 값의 소수 자릿수")


def get_settings() -> Settings:
    return Settings()
