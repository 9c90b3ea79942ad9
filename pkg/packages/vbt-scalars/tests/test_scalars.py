"""
스칼라 산술 테스트
"""

import random
from fractions import Fraction

import pytest

from vbt_scalars import (
    DivisionByZero,
    LaurentPoly,
    PoleAtA,
    RationalFn,
    Scalar,
    ScalarParseError,
    ScalarService,
    constants,
    eval_numeric,
)


def random_scalar(rng: random.Random) -> Scalar:
    def poly() -> LaurentPoly:
        return LaurentPoly.from_mapping(
            {rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))}
        )

    def rational() -> RationalFn:
        den = poly()
        while den.is_zero:
            den = poly()
        return RationalFn(poly(), den)

    return Scalar(rational(), rational())


class TestLaurentPoly:
    """로랑 다항식 테스트"""

    def test_zero_coefficients_are_dropped(self):
        poly = LaurentPoly.from_mapping({-2: 1, 0: 0, 3: -4})
        assert poly.terms == ((-2, 1), (3, -4))

    def test_unsorted_terms_rejected(self):
        with pytest.raises(ScalarParseError):
            LaurentPoly(((2, 1), (1, 1)))

    def test_multiplication(self):
        x = LaurentPoly.from_mapping({-1: 1, 1: 1})
        assert x * x == LaurentPoly.from_mapping({-2: 1, 0: 2, 2: 1})

    def test_addition_cancels_terms(self):
        x = LaurentPoly.from_mapping({-3: 2, 0: 1, 4: -1})
        y = LaurentPoly.from_mapping({-3: -2, 1: 5, 4: 1})
        assert x + y == LaurentPoly.from_mapping({0: 1, 1: 5})
        assert (x - x).is_zero
        assert x + LaurentPoly() == x

    def test_multiplication_by_zero(self):
        x = LaurentPoly.from_mapping({-1: 3, 2: 1})
        assert (x * LaurentPoly()).is_zero

    def test_str(self):
        assert str(LaurentPoly.from_mapping({-2: -1, 2: -1})) == "-A^-2 - A^2"


class TestRationalFn:
    """유리함수 표준형 테스트"""

    def test_common_factor_cancelled(self):
        # (A² − 1)/(A − 1) = A + 1
        num = LaurentPoly.from_mapping({0: -1, 2: 1})
        den = LaurentPoly.from_mapping({0: -1, 1: 1})
        value = RationalFn(num, den)
        assert value.is_polynomial
        assert value.num == LaurentPoly.from_mapping({0: 1, 1: 1})

    def test_shift_moves_into_numerator(self):
        value = RationalFn(LaurentPoly.monomial(0), LaurentPoly.monomial(3))
        assert value == RationalFn.monomial(-3)
        assert value.den == LaurentPoly.monomial(0)

    def test_denominator_sign_normalized(self):
        value = RationalFn(1, LaurentPoly.from_mapping({0: -2, 1: 1}))
        assert value.den.terms[0][1] > 0
        assert value.num == LaurentPoly.monomial(0, -1)

    def test_integer_content_cancelled(self):
        assert RationalFn(6, 4) * 2 == RationalFn(3)

    def test_same_value_built_two_ways(self):
        x = RationalFn(LaurentPoly.from_mapping({0: 1, 1: 1}), LaurentPoly.from_mapping({0: 1, 2: 1}))
        y = RationalFn(1, LaurentPoly.from_mapping({0: 1, 2: 1})) + RationalFn(
            LaurentPoly.monomial(1), LaurentPoly.from_mapping({0: 1, 2: 1})
        )
        assert x == y
        assert hash(x) == hash(y)

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            RationalFn(1, 0)

    def test_exact_substitution(self):
        value = RationalFn(LaurentPoly.from_mapping({0: 1, 1: 1}), LaurentPoly.monomial(2, 3))
        assert value.at(Fraction(1, 2)) == Fraction(2)

    def test_pole(self):
        value = RationalFn(1, LaurentPoly.from_mapping({0: -1, 1: 1}))
        with pytest.raises(PoleAtA):
            value.evaluate(1)


class TestScalarArith:
    """Scalar 사칙연산 테스트"""

    def setup_method(self):
        self.service = ScalarService()
        self.c = constants()

    def test_sqrt_delta_squared(self):
        root = Scalar.sqrt_delta()
        result = self.service.scalar_arith(root, root, "mul")
        assert result == Scalar(RationalFn(LaurentPoly.from_mapping({-4: 1, 0: 1, 4: 1})))
        assert result == self.c.Delta

    def test_additive_identity(self):
        x = random_scalar(random.Random(1))
        assert self.service.scalar_arith(x, Scalar(0), "add") == x

    def test_inverse_root_squared(self):
        assert self.c.b * self.c.b == self.c.a

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            self.service.scalar_arith(Scalar(1), Scalar(0), "div")

    def test_field_axioms_random(self):
        rng = random.Random(7)
        for _ in range(5):
            x, y, z = random_scalar(rng), random_scalar(rng), random_scalar(rng)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            if x.norm():
                assert x * x.inverse() == 1

    def test_int_coercion(self):
        assert 2 * Scalar(1) == Scalar(2)
        assert Scalar(1) - 1 == 0

    def test_serialization(self):
        x = random_scalar(random.Random(3))
        payload = x.to_dict()
        assert all(isinstance(coeff, str) for coeff, _ in payload["p"]["num"])
        assert Scalar.from_dict(payload) == x

    def test_from_dict_rejects_garbage(self):
        with pytest.raises(ScalarParseError):
            Scalar.from_dict({"p": 1})


class TestEvalNumeric:
    """수치 대입 테스트"""

    def test_delta_at_one(self):
        assert eval_numeric(constants().Delta, 1) == pytest.approx(3)
        assert eval_numeric(Scalar.sqrt_delta(), 1) == pytest.approx(3 ** 0.5)

    def test_homomorphism(self):
        rng = random.Random(11)
        value = 1.1
        for _ in range(5):
            x, y = random_scalar(rng), random_scalar(rng)
            try:
                expected = eval_numeric(x, value) * eval_numeric(y, value)
            except PoleAtA:
                continue
            assert eval_numeric(x * y, value) == pytest.approx(expected, rel=1e-9, abs=1e-9)
