"""
스칼라 행렬 연산

리스트의 리스트로 표현된 Scalar 정사각 행렬에 대한 곱, 행렬식, 연립방정식 풀이.
행렬식과 풀이는 sympy.Matrix 에 맡긴다. √Δ 는 기호 s 로 옮겨 계산하고,
돌아올 때 Scalar 산술로 s² = Δ 를 적용한다.
"""

from typing import List, Sequence

import numpy as np
import sympy

from .exceptions import SingularMatrix
from .models import ONE, ZERO, RationalFn, Scalar

ScalarMatrix = List[List[Scalar]]

A_SYMBOL = sympy.Symbol("A")
SQRT_DELTA_SYMBOL = sympy.Symbol("s")


def identity_matrix(size: int) -> ScalarMatrix:
    return [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]


def matmul(left: Sequence[Sequence[Scalar]], right: Sequence[Sequence[Scalar]]) -> ScalarMatrix:
    inner = len(right)
    cols = len(right[0]) if inner else 0
    result: ScalarMatrix = []
    for row in left:
        out_row = []
        for j in range(cols):
            acc = ZERO
            for k in range(inner):
                if row[k] and right[k][j]:
                    acc = acc + row[k] * right[k][j]
            out_row.append(acc)
        result.append(out_row)
    return result


def _rational_expr(value: RationalFn) -> sympy.Expr:
    if value.is_zero:
        return sympy.Integer(0)
    num = value.num_poly.as_expr(A_SYMBOL)
    den = value.den_poly.as_expr(A_SYMBOL)
    return A_SYMBOL ** value.shift * num / den


def to_sympy(value: Scalar) -> sympy.Expr:
    """p + q·√Δ → p(A) + q(A)·s"""
    return _rational_expr(value.p) + _rational_expr(value.q) * SQRT_DELTA_SYMBOL


def _poly_to_scalar(expr: sympy.Expr) -> Scalar:
    poly = sympy.Poly(expr, A_SYMBOL, SQRT_DELTA_SYMBOL, domain=sympy.QQ)
    root = Scalar.sqrt_delta()
    result = ZERO
    for (a_exp, s_exp), coeff in poly.terms():
        term = Scalar.monomial(a_exp, int(coeff.p)) * root ** s_exp
        result = result + term / int(coeff.q)
    return result


def from_sympy(expr: sympy.Expr) -> Scalar:
    """A, s 의 유리식 → Scalar (s² = Δ 로 환원)"""
    num, den = sympy.fraction(sympy.cancel(sympy.sympify(expr)))
    return _poly_to_scalar(num) / _poly_to_scalar(den)


def _is_zero(expr: sympy.Expr) -> bool:
    return from_sympy(expr).is_zero


def _sympy_matrix(matrix: Sequence[Sequence[Scalar]]) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(entry) for entry in row] for row in matrix])


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    if not matrix:
        return ONE
    # berkowitz 는 나눗셈이 없어 s 를 미지수로 두어도 정확하다
    return from_sympy(_sympy_matrix(matrix).det(method="berkowitz"))


def solve(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> List[Scalar]:
    """matrix · x = rhs 의 유일해"""
    size = len(matrix)
    system = _sympy_matrix(matrix)
    if determinant(matrix).is_zero:
        raise SingularMatrix(size, system.rank(iszerofunc=_is_zero))
    column = sympy.Matrix([to_sympy(entry) for entry in rhs])
    solution = system.LUsolve(column, iszerofunc=_is_zero)
    return [from_sympy(solution[i]) for i in range(size)]


def evaluate_matrix(matrix: Sequence[Sequence[Scalar]], value: complex) -> np.ndarray:
    """A = value 에서의 복소 행렬"""
    return np.array(
        [[entry.evaluate(value) for entry in row] for row in matrix], dtype=complex
    )
