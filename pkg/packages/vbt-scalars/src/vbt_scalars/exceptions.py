"""
vbt-scalars 예외 클래스

스칼라 연산과 관련된 예외들을 정의합니다.
"""

from typing import Any, Dict, Optional


class ScalarException(Exception):
    """스칼라 연산 관련 기본 예외 클래스"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """CLI 출력용 구조화된 오류 객체"""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class DivisionByZero(ScalarException):
    """역원이 없는 값으로 나누기"""

    def __init__(self, operand: str):
        message = f"Division by a non-invertible scalar: {operand}"
        details = {"operand": operand}
        super().__init__(message, details)


class PoleAtA(ScalarException):
    """수치 대입 지점에서 분모가 0이 되는 경우"""

    def __init__(self, value: Any, expression: str):
        message = f"Denominator vanishes at A = {value}"
        details = {"A": str(value), "expression": expression}
        super().__init__(message, details)


class SingularMatrix(ScalarException):
    """가역이 아닌 스칼라 행렬"""

    def __init__(self, size: int, rank: int):
        message = f"Matrix of size {size} is singular (rank {rank})"
        details = {"size": size, "rank": rank}
        super().__init__(message, details)


class ScalarParseError(ScalarException):
    """직렬화된 스칼라 파싱 실패"""

    def __init__(self, reason: str, payload: Any = None):
        message = f"Invalid scalar serialization: {reason}"
        details = {"reason": reason, "payload": repr(payload)[:200]}
        super().__init__(message, details)
