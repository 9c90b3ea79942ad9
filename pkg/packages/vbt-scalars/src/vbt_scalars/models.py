"""
스칼라 모듈 데이터 모델

A 에 대한 로랑 다항식(LaurentPoly), 약분된 유리함수(RationalFn),
그리고 Q(A)[√Δ] 의 원소(Scalar)를 정의합니다.
정수 계수 다항식 연산(곱셈, gcd, 약분)은 sympy 의 ZZ[A] 링에 맡깁니다.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Tuple, Union

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from .exceptions import DivisionByZero, PoleAtA, ScalarParseError

POLY_RING, A_GEN = ring("A", ZZ)
_ZERO = POLY_RING.zero
_ONE = POLY_RING.one

# 수치 대입 시 분모가 0으로 간주되는 한계
POLE_TOLERANCE = 1e-12


def _poly_from_terms(terms: Mapping[int, int]) -> PolyElement:
    return POLY_RING.from_dict({(exp,): coeff for exp, coeff in terms.items() if coeff})


def _strip(poly: PolyElement) -> Tuple[int, PolyElement]:
    """A 의 거듭제곱 인수를 떼어내 (지수, 상수항이 0이 아닌 다항식) 으로 돌려준다."""
    if not poly:
        return 0, _ZERO
    low = min(monom[0] for monom in poly.keys())
    if low == 0:
        return 0, poly
    return low, POLY_RING.from_dict({(monom[0] - low,): c for monom, c in poly.items()})


def _constant_term(poly: PolyElement) -> int:
    return int(poly.get((0,), 0))


def _poly_items(poly: PolyElement) -> List[Tuple[int, int]]:
    return sorted((monom[0], int(coeff)) for monom, coeff in poly.items())


def _eval_poly(poly: PolyElement, value: complex) -> complex:
    return sum(complex(coeff) * value ** exp for exp, coeff in _poly_items(poly))


def _eval_poly_exact(poly: PolyElement, value: Fraction) -> Fraction:
    return sum((Fraction(coeff) * value ** exp for exp, coeff in _poly_items(poly)), Fraction(0))


@dataclass(frozen=True)
class LaurentPoly:
    """정수 계수 로랑 다항식 (지수 오름차순, 0 계수 없음)"""

    terms: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        exps = [exp for exp, _ in self.terms]
        if exps != sorted(set(exps)) or any(coeff == 0 for _, coeff in self.terms):
            raise ScalarParseError("terms must be sorted, distinct and nonzero", self.terms)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((int(e), int(c)) for e, c in mapping.items() if c)))

    @classmethod
    def from_poly(cls, shift: int, poly: PolyElement) -> "LaurentPoly":
        return cls(tuple((exp + shift, coeff) for exp, coeff in _poly_items(poly)))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls.from_mapping({exponent: coeff})

    def to_poly(self) -> Tuple[int, PolyElement]:
        """(shift, 다항식) 분해; 다항식의 상수항은 0이 아니다"""
        if not self.terms:
            return 0, _ZERO
        low = self.terms[0][0]
        return low, _poly_from_terms({exp - low: coeff for exp, coeff in self.terms})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        s1, p1 = self.to_poly()
        s2, p2 = other.to_poly()
        low = min(s1, s2)
        return LaurentPoly.from_poly(low, p1 * A_GEN ** (s1 - low) + p2 * A_GEN ** (s2 - low))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((exp, -coeff) for exp, coeff in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        s1, p1 = self.to_poly()
        s2, p2 = other.to_poly()
        return LaurentPoly.from_poly(s1 + s2, p1 * p2)

    def evaluate(self, value: complex) -> complex:
        return sum(complex(coeff) * value ** exp for exp, coeff in self.terms)

    def to_list(self) -> List[List[Any]]:
        """직렬화: [[계수 문자열, 지수], ...]"""
        return [[str(coeff), exp] for exp, coeff in self.terms]

    @classmethod
    def from_list(cls, items: Any) -> "LaurentPoly":
        try:
            mapping: Dict[int, int] = {}
            for coeff, exp in items:
                mapping[int(exp)] = mapping.get(int(exp), 0) + int(coeff)
        except (TypeError, ValueError) as exc:
            raise ScalarParseError(f"bad term list ({exc})", items) from exc
        return cls.from_mapping(mapping)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.terms:
            if exp == 0:
                pieces.append(str(coeff))
                continue
            power = "A" if exp == 1 else f"A^{exp}"
            if coeff == 1:
                pieces.append(power)
            elif coeff == -1:
                pieces.append(f"-{power}")
            else:
                pieces.append(f"{coeff}*{power}")
        return " + ".join(pieces).replace("+ -", "- ")


class RationalFn:
    """
    Q(A) 의 원소, 표준형 A^shift · num / den.

    표준형 조건: num, den 은 ZZ[A] 의 서로소 다항식이고 둘 다 상수항이 0이 아니며
    (num = 0 이면 shift = 0, den = 1), den 의 상수항은 양수이다.
    표준형이 유일하므로 동등성은 필드 비교로 결정된다.
    """

    __slots__ = ("shift", "num_poly", "den_poly", "_hash")

    def __init__(self, num: Union["LaurentPoly", int] = 0, den: Union["LaurentPoly", int] = 1):
        num_lp = LaurentPoly.from_mapping({0: num}) if isinstance(num, int) else num
        den_lp = LaurentPoly.from_mapping({0: den}) if isinstance(den, int) else den
        if den_lp.is_zero:
            raise DivisionByZero(str(num_lp))
        s1, p1 = num_lp.to_poly()
        s2, p2 = den_lp.to_poly()
        self._set(*_normalize(s1 - s2, p1, p2))

    def _set(self, shift: int, num: PolyElement, den: PolyElement) -> None:
        self.shift = shift
        self.num_poly = num
        self.den_poly = den
        self._hash = None

    @classmethod
    def _raw(cls, shift: int, num: PolyElement, den: PolyElement) -> "RationalFn":
        obj = cls.__new__(cls)
        obj._set(shift, num, den)
        return obj

    @classmethod
    def _make(cls, shift: int, num: PolyElement, den: PolyElement) -> "RationalFn":
        return cls._raw(*_normalize(shift, num, den))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "RationalFn":
        if coeff == 0:
            return cls._raw(0, _ZERO, _ONE)
        return cls._raw(exponent, _poly_from_terms({0: coeff}), _ONE)

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly.from_poly(self.shift, self.num_poly)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly.from_poly(0, self.den_poly)

    @property
    def is_zero(self) -> bool:
        return not self.num_poly

    @property
    def is_polynomial(self) -> bool:
        return self.den_poly == _ONE

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return (
            self.shift == other.shift
            and self.num_poly == other.num_poly
            and self.den_poly == other.den_poly
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.shift, tuple(_poly_items(self.num_poly)), tuple(_poly_items(self.den_poly)))
            )
        return self._hash

    def __neg__(self) -> "RationalFn":
        return RationalFn._raw(self.shift, -self.num_poly, self.den_poly)

    def __add__(self, other: Union["RationalFn", int]) -> "RationalFn":
        other = _as_rational(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.shift, other.shift)
        left = self.num_poly * A_GEN ** (self.shift - low)
        right = other.num_poly * A_GEN ** (other.shift - low)
        if self.den_poly == other.den_poly:
            return RationalFn._make(low, left + right, self.den_poly)
        return RationalFn._make(
            low, left * other.den_poly + right * self.den_poly, self.den_poly * other.den_poly
        )

    __radd__ = __add__

    def __sub__(self, other: Union["RationalFn", int]) -> "RationalFn":
        return self + (-_as_rational(other))

    def __rsub__(self, other: Union["RationalFn", int]) -> "RationalFn":
        return _as_rational(other) + (-self)

    def __mul__(self, other: Union["RationalFn", int]) -> "RationalFn":
        other = _as_rational(other)
        if self.is_zero or other.is_zero:
            return RationalFn._raw(0, _ZERO, _ONE)
        shift = self.shift + other.shift
        num = self.num_poly * other.num_poly
        if self.is_polynomial and other.is_polynomial:
            return RationalFn._raw(shift, num, _ONE)
        return RationalFn._make(shift, num, self.den_poly * other.den_poly)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self.is_zero:
            raise DivisionByZero(str(self))
        return RationalFn._make(-self.shift, self.den_poly, self.num_poly)

    def __truediv__(self, other: Union["RationalFn", int]) -> "RationalFn":
        return self * _as_rational(other).inverse()

    def __pow__(self, exponent: int) -> "RationalFn":
        base = self if exponent >= 0 else self.inverse()
        result = RationalFn(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def evaluate(self, value: complex) -> complex:
        """A = value 에서의 수치 값"""
        value = complex(value)
        den_value = _eval_poly(self.den_poly, value)
        if abs(den_value) < POLE_TOLERANCE or (self.shift < 0 and value == 0):
            raise PoleAtA(value, str(self))
        if self.is_zero:
            return 0j
        return value ** self.shift * _eval_poly(self.num_poly, value) / den_value

    def at(self, value: Fraction) -> Fraction:
        """유리수 A 에서의 정확한 값"""
        value = Fraction(value)
        den_value = _eval_poly_exact(self.den_poly, value)
        if den_value == 0 or (self.shift < 0 and value == 0):
            raise PoleAtA(value, str(self))
        if self.is_zero:
            return Fraction(0)
        return value ** self.shift * _eval_poly_exact(self.num_poly, value) / den_value

    def to_dict(self) -> Dict[str, List[List[Any]]]:
        return {"num": self.num.to_list(), "den": self.den.to_list()}

    @classmethod
    def from_dict(cls, payload: Any) -> "RationalFn":
        if not isinstance(payload, dict) or "num" not in payload or "den" not in payload:
            raise ScalarParseError("rational function needs 'num' and 'den'", payload)
        return cls(LaurentPoly.from_list(payload["num"]), LaurentPoly.from_list(payload["den"]))

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"


def _normalize(shift: int, num: PolyElement, den: PolyElement) -> Tuple[int, PolyElement, PolyElement]:
    if not den:
        raise DivisionByZero(str(LaurentPoly.from_poly(shift, num)))
    if not num:
        return 0, _ZERO, _ONE
    s1, num = _strip(num)
    s2, den = _strip(den)
    shift += s1 - s2
    if den != _ONE:
        num, den = num.cancel(den)
    if _constant_term(den) < 0:
        num, den = -num, -den
    return shift, num, den


def _as_rational(value: Union[RationalFn, int]) -> RationalFn:
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, int):
        return RationalFn.monomial(0, value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational function")


# Δ = d² − 1 = A⁴ + 1 + A⁻⁴
DELTA_RATIONAL = RationalFn(LaurentPoly.from_mapping({-4: 1, 0: 1, 4: 1}))


class Scalar:
    """
    Q(A)[√Δ] 의 원소 p + q·√Δ.

    (p, q) 표현이 유일하므로 동등성은 성분별 비교이다.
    값은 생성 후 변하지 않는다.
    """

    __slots__ = ("p", "q", "_hash")

    def __init__(self, p: Union[RationalFn, int] = 0, q: Union[RationalFn, int] = 0):
        self.p = _as_rational(p)
        self.q = _as_rational(q)
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "Scalar":
        """coeff · A^exponent"""
        return cls(RationalFn.monomial(exponent, coeff))

    @classmethod
    def sqrt_delta(cls) -> "Scalar":
        return cls(0, 1)

    @property
    def is_zero(self) -> bool:
        return self.p.is_zero and self.q.is_zero

    @property
    def is_rational(self) -> bool:
        """√Δ 성분이 없는지 여부"""
        return self.q.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, RationalFn)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.q))
        return self._hash

    def __neg__(self) -> "Scalar":
        return Scalar(-self.p, -self.q)

    def __add__(self, other: Union["Scalar", RationalFn, int]) -> "Scalar":
        other = as_scalar(other)
        return Scalar(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other: Union["Scalar", RationalFn, int]) -> "Scalar":
        other = as_scalar(other)
        return Scalar(self.p - other.p, self.q - other.q)

    def __rsub__(self, other: Union["Scalar", RationalFn, int]) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other: Union["Scalar", RationalFn, int]) -> "Scalar":
        other = as_scalar(other)
        if self.q.is_zero and other.q.is_zero:
            return Scalar(self.p * other.p)
        p = self.p * other.p + self.q * other.q * DELTA_RATIONAL
        q = self.p * other.q + self.q * other.p
        return Scalar(p, q)

    __rmul__ = __mul__

    def norm(self) -> RationalFn:
        """p² − q²Δ (켤레와의 곱)"""
        return self.p * self.p - self.q * self.q * DELTA_RATIONAL

    def conjugate(self) -> "Scalar":
        return Scalar(self.p, -self.q)

    def inverse(self) -> "Scalar":
        if self.q.is_zero:
            if self.p.is_zero:
                raise DivisionByZero(str(self))
            return Scalar(self.p.inverse())
        norm = self.norm()
        if norm.is_zero:
            raise DivisionByZero(str(self))
        inv = norm.inverse()
        return Scalar(self.p * inv, -self.q * inv)

    def __truediv__(self, other: Union["Scalar", RationalFn, int]) -> "Scalar":
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other: Union["Scalar", RationalFn, int]) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        base = self if exponent >= 0 else self.inverse()
        result = Scalar(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def evaluate(self, value: complex) -> complex:
        """A = value 에서 p(A) + q(A)·sqrt(Δ(A)), 주 분지 제곱근"""
        result = self.p.evaluate(value)
        if not self.q.is_zero:
            delta_value = DELTA_RATIONAL.evaluate(value)
            result += self.q.evaluate(value) * cmath.sqrt(delta_value)
        return result

    def at_rational(self, value: Fraction) -> Tuple[Fraction, Fraction]:
        """유리수 A 에서 (p, q) 성분의 정확한 값"""
        return self.p.at(value), self.q.at(value)

    def to_dict(self) -> Dict[str, Dict[str, List[List[Any]]]]:
        return {"p": self.p.to_dict(), "q": self.q.to_dict()}

    @classmethod
    def from_dict(cls, payload: Any) -> "Scalar":
        if not isinstance(payload, dict) or "p" not in payload or "q" not in payload:
            raise ScalarParseError("scalar needs 'p' and 'q'", payload)
        return cls(RationalFn.from_dict(payload["p"]), RationalFn.from_dict(payload["q"]))

    def __str__(self) -> str:
        if self.q.is_zero:
            return str(self.p)
        if self.p.is_zero:
            return f"({self.q})*sqrt(Delta)"
        return f"{self.p} + ({self.q})*sqrt(Delta)"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def as_scalar(value: Union[Scalar, RationalFn, int]) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar(value)


ZERO = Scalar(0)
ONE = Scalar(1)


@dataclass(frozen=True)
class NamedConstants:
    """이름 붙은 상수들 (고리 값, 세타, 사면체, F 계수, 합성 규칙 계수)"""

    d: Scalar
    Delta: Scalar
    Theta: Scalar
    T: Scalar
    a: Scalar
    b: Scalar
    g: Scalar
    h: Scalar
    c1: Scalar
    c2: Scalar
    c3: Scalar
    c4: Scalar

    def as_dict(self) -> Dict[str, Scalar]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}
