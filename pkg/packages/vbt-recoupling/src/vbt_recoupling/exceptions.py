"""
vbt-recoupling 예외 클래스
"""

from typing import Any, Dict, Optional


class RecouplingException(Exception):
    """재결합 계산 관련 기본 예외 클래스"""

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


class BadPosition(RecouplingException):
    """규칙을 적용할 수 없는 위치"""

    def __init__(self, position: str, tree: str, reason: str):
        message = f"Cannot apply rule at '{position}' in {tree}: {reason}"
        details = {"position": position, "tree": tree, "reason": reason}
        super().__init__(message, details)


class NotClassicalCrossing(RecouplingException):
    """R 변환에 고전 교차가 아닌 것이 주어짐"""

    def __init__(self, crossing: Any):
        message = f"Expected a classical crossing sign (+1/-1), got {crossing!r}"
        super().__init__(message, {"crossing": str(crossing)})


class NotVirtualCrossing(RecouplingException):
    """가상 교환에 가상 교차가 아닌 것이 주어짐"""

    def __init__(self, crossing: Any):
        message = f"Expected a virtual crossing, got {crossing!r}"
        super().__init__(message, {"crossing": str(crossing)})


class NotClassicalFragment(RecouplingException):
    """유니터리 F 규약은 P, * 라벨 조각에서만 정의된다"""

    def __init__(self, fragment: str):
        message = f"Unitary F convention needs a P/* fragment, got {fragment}"
        super().__init__(message, {"fragment": fragment})


class PatternMismatch(RecouplingException):
    """합성 규칙의 패턴과 맞지 않는 조각"""

    def __init__(self, rule: str, fragment: str, expected: str):
        message = f"{rule}: fragment {fragment} does not match {expected}"
        details = {"rule": rule, "fragment": fragment, "expected": expected}
        super().__init__(message, details)


class SingularBasis(RecouplingException):
    """노름이 0인 기저 트리 (기저 결손)"""

    def __init__(self, tree: str):
        message = f"Basis tree {tree} has zero norm"
        super().__init__(message, {"tree": tree})
