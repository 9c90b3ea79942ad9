"""
vbt-braidrep 예외 클래스
"""

from typing import Any, Dict, Optional


class BraidException(Exception):
    """가상 땋임 관련 기본 예외 클래스"""

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


class BraidSyntaxError(BraidException):
    """땋임 문법 오류"""

    def __init__(self, text: str, position: int, reason: str):
        message = f"Braid syntax error at position {position}: {reason}"
        details = {"text": text, "position": position, "reason": reason}
        super().__init__(message, details)


class IndexOutOfRange(BraidException):
    """1..n−1 밖의 생성원 인덱스"""

    def __init__(self, letter: str, strands: int):
        message = f"Generator {letter} is out of range for {strands} strands (expected 1..{strands - 1})"
        details = {"letter": letter, "strands": strands}
        super().__init__(message, details)


class StrandMismatch(BraidException):
    """가닥 수가 맞지 않는 두 단어 또는 단어와 트리"""

    def __init__(self, expected: int, actual: int, context: str = ""):
        message = f"Strand mismatch{f' in {context}' if context else ''}: expected {expected}, got {actual}"
        details = {"expected": expected, "actual": actual, "context": context}
        super().__init__(message, details)


class BasisDeficiency(BraidException):
    """왼쪽 빗 기저가 독립이 아니거나 작용의 상을 담지 못함"""

    def __init__(self, leaves: int, root: str, reason: str, witness: Optional[str] = None):
        message = f"Basis for {leaves} leaves, root {root} is deficient: {reason}"
        details = {"leaves": leaves, "root": root, "reason": reason, "witness": witness}
        super().__init__(message, details)
