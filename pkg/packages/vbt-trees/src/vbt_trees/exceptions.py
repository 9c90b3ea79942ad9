"""
vbt-trees 예외 클래스
"""

from typing import Any, Dict, Optional


class TreeException(Exception):
    """융합 트리 관련 기본 예외 클래스"""

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


class InadmissibleTree(TreeException):
    """허용되지 않는 꼭짓점 (a, b → c) 을 가진 트리"""

    def __init__(self, tree: str, vertex: Any, mode: str):
        message = f"Inadmissible vertex {vertex} in {tree} ({mode} rules)"
        details = {"tree": tree, "vertex": [str(v) for v in vertex], "mode": mode}
        super().__init__(message, details)


class ShapeMismatch(TreeException):
    """모양이나 뿌리 가닥 수가 서로 다른 트리"""

    def __init__(self, expected: str, actual: str):
        message = f"Shape mismatch: expected {expected}, got {actual}"
        details = {"expected": expected, "actual": actual}
        super().__init__(message, details)


class TreeSyntaxError(TreeException):
    """트리 문법 오류"""

    def __init__(self, text: str, position: int, reason: str):
        message = f"Tree syntax error at position {position}: {reason}"
        details = {"text": text, "position": position, "reason": reason}
        super().__init__(message, details)


class BadLocator(TreeException):
    """트리에 존재하지 않는 꼭짓점 경로"""

    def __init__(self, locator: str, tree: str, reason: str = "no such vertex"):
        message = f"Bad locator '{locator}' for {tree}: {reason}"
        details = {"locator": locator, "tree": tree, "reason": reason}
        super().__init__(message, details)
