"""
땋임 단어, 문법, 닫힘 괄호 테스트
"""

import random

import pytest

from vbt_diagrams import braid_diagram
from vbt_scalars import Scalar, constants
from vbt_braidrep import (
    BraidSyntaxError,
    BraidWord,
    IndexOutOfRange,
    StrandMismatch,
    bracket_closure,
    format_braid,
    parse_braid,
    random_word,
)


def _random_relation(rng: random.Random, strands: int):
    """무작위 관계 (lhs, rhs). 혼합 관계는 v_{i+1} v_i σ_{i+1} = σ_i v_{i+1} v_i"""

    def v(k: int):
        return ("v", k, 1)

    i = rng.randint(1, strands - 1)
    options = [((v(i), v(i)), ())]
    if strands >= 3:
        i = rng.randint(1, strands - 2)
        options.append(((v(i), v(i + 1), v(i)), (v(i + 1), v(i), v(i + 1))))
        options.append(((v(i + 1), v(i), ("s", i + 1, 1)), (("s", i, 1), v(i + 1), v(i))))
    if strands >= 4:
        far = (rng.choice(("s", "v")), 3, 1)
        options.append(((v(1), far), (far, v(1))))
    return rng.choice(options)


class TestParseBraid:
    """땋임 문법"""

    def test_grammar_example(self):
        word = parse_braid("n=3; s1 s2^-1 v1")
        assert word.strands == 3
        assert word.letters == (("s", 1, 1), ("s", 2, -1), ("v", 1, 1))

    def test_virtual_square_reduces(self):
        assert parse_braid("n=2; v1 v1") == BraidWord.identity(2)

    def test_nested_cancellation(self):
        assert len(parse_braid("n=2; s1 v1 v1 s1^-1")) == 0

    def test_without_normalization(self):
        assert len(parse_braid("n=2; v1 v1", normalize=False)) == 2

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_braid("n=2; s5")

    @pytest.mark.parametrize(
        "text, position",
        [("3; s1", 0), ("n=2; x1", 5), ("n=3; s1 v2^-1", 8)],
    )
    def test_syntax_errors(self, text, position):
        with pytest.raises(BraidSyntaxError) as info:
            parse_braid(text)
        assert info.value.details["position"] == position
        assert info.value.to_dict()["error"] == "BraidSyntaxError"

    def test_format(self):
        assert format_braid(parse_braid("n=3;  s1   s2^-1 v1")) == "n=3; s1 s2^-1 v1"
        assert format_braid(BraidWord.identity(4)) == "n=4;"


class TestBraidWord:
    """단어 연산"""

    def test_inverse_cancels(self):
        word = parse_braid("n=3; s1 v2 s2^-1")
        assert (word + word.inverse()).normalized() == BraidWord.identity(3)

    def test_writhe(self):
        assert parse_braid("n=3; s1 s2 s1^-1 v1 s2").writhe == 2

    def test_concat_strand_mismatch(self):
        with pytest.raises(StrandMismatch):
            BraidWord.identity(2).concat(BraidWord.identity(3))

    def test_letter_validation(self):
        with pytest.raises(IndexOutOfRange):
            BraidWord(2, (("v", 2, 1),))
        with pytest.raises(ValueError):
            BraidWord(2, (("s", 1, 2),))

    def test_random_word_is_seeded(self):
        assert random_word(3, 5, seed=7) == random_word(3, 5, seed=7)
        word = random_word(4, 6, seed=1, kinds=("s",))
        assert len(word) == 6
        assert word.is_classical


class TestBracketClosure:
    """닫힘의 괄호 다항식"""

    def setup_method(self):
        self.c = constants()

    def test_identity_two_loops(self):
        assert bracket_closure(BraidWord.identity(2)).value == self.c.d * self.c.d

    def test_single_crossing(self):
        result = bracket_closure(parse_braid("n=2; s1"))
        expected = Scalar.monomial(1) * self.c.d * self.c.d + Scalar.monomial(-1) * self.c.d
        assert result.value == expected
        assert result.value.evaluate(1) == pytest.approx(2)
        assert result.writhe == 1

    def test_virtual_transposition_single_loop(self):
        assert bracket_closure(parse_braid("n=2; v1")).value == self.c.d

    def test_normalized(self):
        result = bracket_closure(BraidWord.identity(2), normalize=True)
        assert result.normalized
        assert result.value == self.c.d
        assert result.to_dict()["normalized"] is True

    @pytest.mark.parametrize("seed", range(100))
    def test_invariant_under_inserted_relations(self, seed):
        """혼합 관계와 가상 관계를 무작위 위치에 끼워 넣어도 다이어그램과 괄호가 같다"""
        rng = random.Random(seed)
        strands = rng.randint(2, 4)
        word = random_word(strands, rng.randint(0, 6), rng=rng)
        lhs, rhs = _random_relation(rng, strands)
        cut = rng.randint(0, len(word))
        left = BraidWord(strands, word.letters[:cut] + lhs + word.letters[cut:])
        right = BraidWord(strands, word.letters[:cut] + rhs + word.letters[cut:])
        assert braid_diagram(left.letters, strands) == braid_diagram(right.letters, strands)
        assert bracket_closure(left).value == bracket_closure(right).value

    @pytest.mark.parametrize("seed", range(100))
    def test_invariant_under_conjugation(self, seed):
        word = random_word(3, 4, seed=seed)
        g = random_word(3, 2, seed=1000 + seed)
        assert bracket_closure(g + word + g.inverse()).value == bracket_closure(word).value

    def test_mixed_relation(self):
        lhs = parse_braid("n=3; v2 v1 s2")
        rhs = parse_braid("n=3; s1 v2 v1")
        assert bracket_closure(lhs).value == bracket_closure(rhs).value
