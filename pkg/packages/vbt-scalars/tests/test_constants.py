"""
이름 붙은 상수 테스트
"""

from fractions import Fraction
import math

import pytest

from vbt_scalars import FIBONACCI_A, Scalar, constants, named_constant, eval_numeric
from vbt_scalars.exceptions import ScalarParseError


class TestConstants:
    """constants() 값 검증"""

    def setup_method(self):
        self.c = constants()

    def test_values_at_one(self):
        one = Fraction(1)
        assert self.c.d.at_rational(one) == (Fraction(-2), Fraction(0))
        assert self.c.Delta.at_rational(one) == (Fraction(3), Fraction(0))
        assert self.c.Theta.at_rational(one) == (Fraction(-3), Fraction(0))
        assert self.c.T.at_rational(one) == (Fraction(27, 2), Fraction(0))

    def test_lemma_coefficients_at_one(self):
        one = Fraction(1)
        assert self.c.c1.at_rational(one) == (Fraction(-1, 27), Fraction(-2, 9))
        assert self.c.c2.at_rational(one) == (Fraction(8, 9), Fraction(0))
        assert self.c.c3.at_rational(one) == (Fraction(2, 3), Fraction(1, 27))
        assert self.c.c4.at_rational(one) == (Fraction(0), Fraction(-8, 9))

    def test_identities(self):
        c = self.c
        assert c.Delta * c.Delta * c.a == c.Delta
        assert c.b * c.b == c.a
        assert c.h == -c.a
        assert c.b == c.g
        assert c.c1 == c.h ** 3 - c.d * c.g * c.h
        assert c.c2 == (c.d - 1) * (c.h - c.h ** 3)
        assert c.c3 == c.h * c.h * c.g - c.d * c.g * c.g
        assert c.c4 == (c.d - 1) * (c.g - c.g * c.h * c.h)

    def test_fibonacci_value(self):
        phi = (1 + math.sqrt(5)) / 2
        assert eval_numeric(self.c.d, FIBONACCI_A) == pytest.approx(phi)
        assert eval_numeric(self.c.Delta, FIBONACCI_A) == pytest.approx(phi)

    def test_named_lookup(self):
        assert named_constant("theta") == self.c.Theta
        assert named_constant("Delta") == self.c.Delta
        with pytest.raises(ScalarParseError):
            named_constant("omega")

    def test_cached_instance(self):
        assert constants() is constants()
        assert isinstance(self.c.as_dict()["c4"], Scalar)
