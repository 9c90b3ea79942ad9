"""
스칼라 서비스

Q(A)[√Δ] 위의 사칙연산, 이름 붙은 상수, 수치 대입을 제공하는 메인 서비스입니다.
"""

import cmath
import logging
import math
import time
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Union

from .exceptions import ScalarParseError
from .models import LaurentPoly, NamedConstants, RationalFn, Scalar, as_scalar
from .utils import ModuleIOLogger

logger = logging.getLogger(__name__)

# 피보나치 모형의 A 값 (d = Δ = 황금비)
FIBONACCI_A = cmath.exp(3j * math.pi / 5)


class ArithOp(str, Enum):
    """스칼라 이항 연산 종류"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


_OPERATIONS: Dict[ArithOp, Callable[[Scalar, Scalar], Scalar]] = {
    ArithOp.ADD: lambda x, y: x + y,
    ArithOp.SUB: lambda x, y: x - y,
    ArithOp.MUL: lambda x, y: x * y,
    ArithOp.DIV: lambda x, y: x / y,
}


@lru_cache(maxsize=1)
def constants() -> NamedConstants:
    """d, Δ, Θ, T 와 F 계수 a, b, g, h, 보조정리 계수 c1..c4"""
    d = Scalar(RationalFn(LaurentPoly.from_mapping({-2: -1, 2: -1})))
    d2 = d * d
    delta = d2 - 1
    theta = delta * (d2 - 2) / d
    t_value = 2 * delta * delta * (d2 - 2) * theta / (d2 * d)

    a = delta.inverse()
    # 1/√Δ = √Δ/Δ
    b = Scalar(0, a.p)
    g = Scalar(0, a.p)
    h = -a

    c1 = h * h * h - d * g * h
    c2 = (d - 1) * (h - h * h * h)
    c3 = h * h * g - d * g * g
    c4 = (d - 1) * (g - g * h * h)
    return NamedConstants(
        d=d, Delta=delta, Theta=theta, T=t_value,
        a=a, b=b, g=g, h=h,
        c1=c1, c2=c2, c3=c3, c4=c4,
    )


def named_constant(name: str) -> Scalar:
    """이름으로 상수 조회 (대소문자 구분 없음)"""
    table = {key.lower(): value for key, value in constants().as_dict().items()}
    key = name.lower()
    if key not in table:
        raise ScalarParseError(f"unknown constant '{name}'", name)
    return table[key]


def loop_value() -> Scalar:
    """닫힌 고리 하나의 값 d"""
    return constants().d


def eval_numeric(x: Union[Scalar, RationalFn, int], value: complex) -> complex:
    """A = value 에서의 수치 값 (√Δ 는 주 분지)"""
    return as_scalar(x).evaluate(value)


class ScalarService:
    """스칼라 연산 서비스"""

    def __init__(self) -> None:
        self.io_logger = ModuleIOLogger("ScalarService")

    def scalar_arith(
        self,
        lhs: Union[Scalar, int],
        rhs: Union[Scalar, int],
        op: Union[ArithOp, str],
    ) -> Scalar:
        """두 스칼라의 정확한 사칙연산"""
        operation = ArithOp(op)
        self.io_logger.log_input("scalar_arith", op=operation.value)
        start = time.time()
        try:
            result = _OPERATIONS[operation](as_scalar(lhs), as_scalar(rhs))
        except Exception as exc:
            self.io_logger.log_error("scalar_arith", exc, time.time() - start)
            raise
        self.io_logger.log_output("scalar_arith", result, time.time() - start)
        return result

    def constants(self) -> NamedConstants:
        return constants()

    def eval_numeric(self, x: Union[Scalar, int], value: complex) -> complex:
        self.io_logger.log_input("eval_numeric", A=value)
        return eval_numeric(x, value)
