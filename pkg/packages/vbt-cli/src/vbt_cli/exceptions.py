"""
vbt-cli 예외 클래스
"""

from typing import Any, Dict, Optional


class CliException(Exception):
    """명령행 관련 기본 예외 클래스"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class CliUsageError(CliException):
    """잘못된 플래그 값 (종료 코드 2)"""

    def __init__(self, flag: str, reason: str, grammar: Optional[str] = None):
        message = f"Invalid value for {flag}: {reason}"
        if grammar:
            message += f" (grammar: {grammar})"
        details = {"flag": flag, "reason": reason, "grammar": grammar}
        super().__init__(message, details)


class CliDomainError(CliException):
    """계산 중 발생한 값 오류 (종료 코드 1)"""

    def __init__(self, command: str, cause: Exception):
        message = f"{command} failed: {cause}"
        details = {"command": command, "cause": type(cause).__name__}
        super().__init__(message, details)
