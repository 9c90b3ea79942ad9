"""
다이어그램 대수 기본 연산 테스트
"""

import random

import pytest

from vbt_diagrams import (
    BoundaryMismatch,
    Diagram,
    DiagramSum,
    InvalidPairing,
    close,
    compose,
    cup,
    cupcap,
    embed,
    identity,
    mirror,
    parse_diagram,
    reduce_turnbacks,
    tensor,
    virtual_transposition,
)
from vbt_scalars import Scalar, constants


def random_diagram(rng: random.Random, bottom: int, top: int) -> Diagram:
    points = list(range(bottom + top))
    rng.shuffle(points)
    return Diagram.from_pairs(bottom, top, zip(points[::2], points[1::2]))


def random_sum(rng: random.Random, bottom: int, top: int) -> DiagramSum:
    return DiagramSum({
        random_diagram(rng, bottom, top): Scalar.monomial(rng.randint(-2, 2), rng.choice([1, -1, 2]))
        for _ in range(2)
    })


def random_widths(rng: random.Random, count: int) -> list:
    """같은 홀짝성의 경계 폭들 (0..5)"""
    parity = rng.randint(0, 1)
    return [parity + 2 * rng.randint(0, 2) for _ in range(count)]


class TestDiagramModel:
    """Diagram 모델 검증"""

    def test_fixed_point_rejected(self):
        with pytest.raises(InvalidPairing):
            Diagram(2, 2, (1, 0, 2, 3))

    def test_odd_boundary_rejected(self):
        with pytest.raises(InvalidPairing):
            Diagram.from_pairs(1, 2, [(0, 1)])

    def test_text_form(self):
        assert virtual_transposition().to_text() == "2/2: 0-3, 1-2"
        assert parse_diagram("2/2: 0-3, 1-2") == virtual_transposition()
        assert parse_diagram(" 0/2: 0-1") == cup()
        with pytest.raises(InvalidPairing):
            parse_diagram("2/2: 0-3 1-2")

    def test_planarity(self):
        assert cupcap().is_planar()
        assert Diagram.identity(3).is_planar()
        assert not virtual_transposition().is_planar()


class TestCompose:
    """합성 테스트"""

    def test_identity(self):
        assert compose(identity(2), identity(2)) == identity(2)

    def test_cupcap_squared(self):
        d = constants().d
        assert compose(cupcap(), cupcap()) == DiagramSum.of(cupcap(), d)

    def test_transposition_squared(self):
        assert compose(virtual_transposition(), virtual_transposition()) == identity(2)

    def test_boundary_mismatch(self):
        with pytest.raises(BoundaryMismatch):
            compose(identity(2), identity(3))

    def test_cup_into_cupcap(self):
        # cup 위에 cupcap: 고리 하나와 cup
        d = constants().d
        assert compose(cup(), cupcap()) == DiagramSum.of(cup(), d)

    def test_associativity_random(self):
        rng = random.Random(5)
        for _ in range(500):
            w0, w1, w2, w3 = random_widths(rng, 4)
            x, y, z = random_sum(rng, w0, w1), random_sum(rng, w1, w2), random_sum(rng, w2, w3)
            assert compose(compose(x, y), z) == compose(x, compose(y, z))


class TestTensor:
    """텐서곱 테스트"""

    def test_identity(self):
        assert tensor(identity(1), identity(1)) == identity(2)

    def test_cupcap_with_strand(self):
        expected = Diagram.from_pairs(3, 3, [(0, 1), (2, 5), (3, 4)])
        assert tensor(cupcap(), identity(1)) == DiagramSum.of(expected)

    def test_distributes(self):
        rng = random.Random(2)
        x, y, z = random_sum(rng, 2, 2), random_sum(rng, 2, 2), random_sum(rng, 1, 1)
        assert tensor(x + y, z) == tensor(x, z) + tensor(y, z)

    def test_associativity(self):
        rng = random.Random(3)
        x, y, z = random_sum(rng, 1, 1), random_sum(rng, 2, 2), random_sum(rng, 2, 0)
        assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))

    def test_interchange_law(self):
        rng = random.Random(4)
        for _ in range(500):
            w0, w1, w2 = random_widths(rng, 3)
            u0, u1, u2 = random_widths(rng, 3)
            a, b = random_sum(rng, w0, w1), random_sum(rng, w1, w2)
            c, e = random_sum(rng, u0, u1), random_sum(rng, u1, u2)
            assert tensor(compose(a, b), compose(c, e)) == compose(tensor(a, c), tensor(b, e))

    def test_embed(self):
        assert embed(virtual_transposition(), 1, 3) == tensor(identity(1), virtual_transposition())
        with pytest.raises(BoundaryMismatch):
            embed(virtual_transposition(), 2, 3)


class TestClose:
    """닫기 테스트"""

    def test_identity(self):
        d = constants().d
        assert close(identity(2)) == d * d

    def test_transposition(self):
        assert close(virtual_transposition()) == constants().d

    def test_empty(self):
        assert close(DiagramSum.of(Diagram.empty(), 5)) == 5

    def test_mismatch(self):
        with pytest.raises(BoundaryMismatch):
            close(cup())

    def test_mirror_involution(self):
        rng = random.Random(9)
        x = random_sum(rng, 2, 4)
        assert mirror(mirror(x)) == x
        assert mirror(cup()) == DiagramSum.of(Diagram.from_pairs(2, 0, [(0, 1)]))


class TestReduceTurnbacks:
    """되돌이 제거 테스트"""

    def test_drops_turnback(self):
        assert reduce_turnbacks(cupcap(), top_cables=[(0, 1)]).is_zero
        assert reduce_turnbacks(cupcap(), bottom_cables=[(0, 1)]).is_zero

    def test_keeps_through_strands(self):
        x = identity(2) + DiagramSum.of(cupcap(), 3)
        assert reduce_turnbacks(x, top_cables=[(0, 1)]) == identity(2)
