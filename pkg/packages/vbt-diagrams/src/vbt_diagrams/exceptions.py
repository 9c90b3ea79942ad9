"""
vbt-diagrams 예외 클래스
"""

from typing import Any, Dict, Optional


class DiagramException(Exception):
    """다이어그램 대수 관련 기본 예외 클래스"""

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


class BoundaryMismatch(DiagramException):
    """합성/닫기에서 경계 점 개수가 맞지 않음"""

    def __init__(self, operation: str, expected: int, actual: int):
        message = f"{operation}: boundary mismatch (expected {expected} points, got {actual})"
        details = {"operation": operation, "expected": expected, "actual": actual}
        super().__init__(message, details)


class InvalidPairing(DiagramException):
    """고정점 없는 대합이 아닌 짝짓기"""

    def __init__(self, reason: str, pairing: Any = None):
        message = f"Invalid pairing: {reason}"
        details = {"reason": reason, "pairing": repr(pairing)[:200]}
        super().__init__(message, details)
