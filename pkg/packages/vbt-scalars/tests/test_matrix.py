"""
스칼라 행렬 테스트
"""

import numpy as np
import pytest

from vbt_scalars import (
    ONE,
    ZERO,
    Scalar,
    SingularMatrix,
    constants,
    determinant,
    evaluate_matrix,
    from_sympy,
    identity_matrix,
    matmul,
    solve,
    to_sympy,
)


class TestMatrix:
    """행렬식과 풀이"""

    def setup_method(self):
        c = constants()
        self.matrix = [[c.a, c.b], [c.b, c.h]]

    def test_identity_product(self):
        assert matmul(identity_matrix(2), self.matrix) == self.matrix

    def test_determinant(self):
        c = constants()
        assert determinant(self.matrix) == c.a * c.h - c.b * c.b

    def test_solve(self):
        rhs = [Scalar(1), Scalar(2)]
        x = solve(self.matrix, rhs)
        assert matmul(self.matrix, [[v] for v in x]) == [[v] for v in rhs]

    def test_singular(self):
        with pytest.raises(SingularMatrix) as info:
            solve([[Scalar(1), Scalar(2)], [Scalar(2), Scalar(4)]], [Scalar(0), Scalar(1)])
        assert info.value.details["rank"] == 1
        assert determinant([[Scalar(1), Scalar(2)], [Scalar(2), Scalar(4)]]) == 0

    def test_f_matrix_determinant(self):
        """det F = −(Δ+1)/Δ² (√Δ 성분이 서로 상쇄)"""
        c = constants()
        det = determinant([[c.a, c.b], [c.g, c.h]])
        assert det.is_rational
        assert det == -(c.Delta + 1) / (c.Delta * c.Delta)

    def test_three_by_three_with_root(self):
        c = constants()
        matrix = [[c.a, c.b, ZERO], [c.g, c.h, c.d], [ONE, c.b, c.Theta]]
        # 첫 행 여인수 전개
        expected = (
            c.a * (c.h * c.Theta - c.d * c.b)
            - c.b * (c.g * c.Theta - c.d * ONE)
        )
        assert determinant(matrix) == expected

    def test_solve_with_root(self):
        c = constants()
        matrix = [[c.a, c.b], [c.g, c.h]]
        rhs = [c.b, c.d]
        x = solve(matrix, rhs)
        assert matmul(matrix, [[v] for v in x]) == [[v] for v in rhs]

    def test_sympy_conversion(self):
        for value in constants().as_dict().values():
            assert from_sympy(to_sympy(value)) == value

    def test_numeric(self):
        values = evaluate_matrix(identity_matrix(3), 1.0)
        assert np.allclose(values, np.eye(3))
