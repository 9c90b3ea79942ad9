"""
vbt-scalars

A 에 대한 유리함수체에 √Δ 를 덧붙인 Q(A)[√Δ] 위의 정확한 산술과
복소수 A 에서의 수치 대입을 제공하는 모듈입니다.
"""

from .exceptions import (
    DivisionByZero,
    PoleAtA,
    ScalarException,
    ScalarParseError,
    SingularMatrix,
)
from .matrix import (
    determinant,
    evaluate_matrix,
    from_sympy,
    identity_matrix,
    matmul,
    solve,
    to_sympy,
)
from .models import (
    DELTA_RATIONAL,
    ONE,
    ZERO,
    LaurentPoly,
    NamedConstants,
    RationalFn,
    Scalar,
    as_scalar,
)
from .service import (
    FIBONACCI_A,
    ArithOp,
    ScalarService,
    constants,
    eval_numeric,
    loop_value,
    named_constant,
)
from .utils import ModuleIOLogger, setup_logging

__version__ = "1.0.0"

__all__ = [
    # Service
    "ScalarService",
    "ArithOp",
    "constants",
    "named_constant",
    "loop_value",
    "eval_numeric",
    "FIBONACCI_A",
    # Models
    "LaurentPoly",
    "RationalFn",
    "Scalar",
    "NamedConstants",
    "DELTA_RATIONAL",
    "ZERO",
    "ONE",
    "as_scalar",
    # Matrix
    "identity_matrix",
    "matmul",
    "determinant",
    "solve",
    "evaluate_matrix",
    "to_sympy",
    "from_sympy",
    # Exceptions
    "ScalarException",
    "DivisionByZero",
    "PoleAtA",
    "SingularMatrix",
    "ScalarParseError",
    # Utils
    "ModuleIOLogger",
    "setup_logging",
]
