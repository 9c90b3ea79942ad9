"""
국소 변환 테스트: F, R, 가상 교환, 거품, 되돌이
"""

import pytest

from vbt_scalars import FIBONACCI_A, Scalar, constants, eval_numeric
from vbt_trees import Channel, ParticleLabel, TreeVector, parse_tree
from vbt_recoupling import (
    BadPosition,
    NotClassicalCrossing,
    NotClassicalFragment,
    NotVirtualCrossing,
    bubble_coefficient,
    bubble_reduce,
    f_move,
    f_rule,
    r_matrix_report,
    r_move,
    swap_move,
    turnback_reduce,
    vertex_rule,
)

P, STAR, PTILDE = ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE
SYM, ALT, VAC = Channel.SYM, Channel.ALT, Channel.VAC


class TestFMove:
    """F 변환"""

    def setup_method(self):
        self.c = constants()
        self.right = parse_tree("(L:P (L:P L:P):P):P")

    def test_unitary_coefficients(self):
        result = f_move(self.right, "")
        assert result == TreeVector({
            parse_tree("((L:P L:P):P L:P):P"): self.c.a,
            parse_tree("((L:P L:P):* L:P):P"): self.c.g,
        })

    def test_forward_backward_is_scalar(self):
        back = f_move(f_move(self.right, "", "forward"), "", "backward")
        factor = (self.c.Delta + 1) / (self.c.Delta * self.c.Delta)
        assert back == TreeVector.of(self.right, factor)

    def test_identity_at_fibonacci_value(self):
        factor = (self.c.Delta + 1) / (self.c.Delta * self.c.Delta)
        assert abs(eval_numeric(factor, FIBONACCI_A) - 1) < 1e-9

    def test_vacuum_leg_is_trivial(self):
        tree = parse_tree("(L:P (L:P L:*):P):P")
        assert f_move(tree, "") == TreeVector.of(parse_tree("((L:P L:P):P L:*):P"))

    def test_twisted_fragment_rejected(self):
        with pytest.raises(NotClassicalFragment):
            f_move(parse_tree("(L:P (L:P L:P):~P):P"), "")

    def test_bad_positions(self):
        comb = parse_tree("((L:P L:P):P L:P):P")
        with pytest.raises(BadPosition):
            f_move(comb, "", "forward")
        with pytest.raises(BadPosition):
            f_move(comb, "R")
        with pytest.raises(BadPosition):
            f_move(comb, "LLL", "backward")

    def test_channel_rule_with_vacuum_root_is_certified(self):
        assert f_rule(SYM, SYM, SYM, SYM, VAC).certified
        assert f_rule(ALT, SYM, ALT, SYM, VAC).certified

    def test_channel_rule_with_vacuum_leaf(self):
        rule = f_rule(VAC, SYM, ALT, ALT, ALT)
        assert rule.certified
        assert [(str(t), c) for t, c in rule.terms] == [("((L:vac L:sym):sym L:alt):alt", Scalar(1))]


class TestRMove:
    """R 변환"""

    @pytest.mark.parametrize("root", ["P", "*"])
    def test_inverse_crossings_cancel(self, root):
        tree = parse_tree(f"(L:P L:P):{root}")
        assert r_move(r_move(tree, "", 1), "", -1) == TreeVector.of(tree)

    def test_diagonal_on_root_labels(self):
        for root in ("P", "*"):
            tree = parse_tree(f"(L:P L:P):{root}")
            result = r_move(tree, "", "negative")
            assert list(result) == [tree]

    def test_values_at_one(self):
        cap = parse_tree("(L:P L:P):*")
        fork = parse_tree("(L:P L:P):P")
        assert r_move(cap, "", -1).coefficient(cap).evaluate(1) == pytest.approx(1)
        assert r_move(fork, "", -1).coefficient(fork).evaluate(1) == pytest.approx(-1)

    def test_report_matches_closed_form(self):
        report = r_matrix_report()
        assert report.framing_exponent == 0
        assert report.ratio_matches
        assert all(entry.matches for entry in report.entries)
        assert len(report.entries) == 4

    def test_eigenvalues_up_to_framing(self):
        """두 잎 섹터의 고유값 = A^k · {A⁸, −A⁴} (음의 교차), 역교차는 역수"""
        k = r_matrix_report().framing_exponent
        assert k is not None
        framing = Scalar.monomial(k)
        cap, fork = parse_tree("(L:P L:P):*"), parse_tree("(L:P L:P):P")
        negative = {r_move(tree, "", -1).coefficient(tree) for tree in (cap, fork)}
        assert negative == {framing * Scalar.monomial(8), framing * Scalar.monomial(4, -1)}
        assert r_move(cap, "", -1).coefficient(cap) == framing * Scalar.monomial(8)
        assert r_move(fork, "", -1).coefficient(fork) == framing * Scalar.monomial(4, -1)
        assert r_move(cap, "", 1).coefficient(cap) == Scalar.monomial(-8) / framing
        assert r_move(fork, "", 1).coefficient(fork) == Scalar.monomial(-4, -1) / framing

    def test_channel_rules_certified(self):
        for left, right, out in [(SYM, SYM, SYM), (SYM, ALT, ALT), (ALT, ALT, VAC), (VAC, SYM, SYM)]:
            for sign in (1, -1):
                assert vertex_rule("s", sign, left, right, out).certified

    def test_errors(self):
        with pytest.raises(NotClassicalCrossing):
            r_move(parse_tree("(L:P L:P):P"), "", "virtual")
        with pytest.raises(BadPosition):
            r_move(parse_tree("L:P"), "", 1)


class TestSwapMove:
    """가상 교환"""

    @pytest.mark.parametrize(
        "text",
        ["(L:P L:P):P", "(L:P L:P):*", "((L:P L:P):* L:P):P", "(L:P L:~P):P", "((L:P L:P):P L:P):*"],
    )
    def test_involution(self, text):
        tree = parse_tree(text)
        assert swap_move(swap_move(tree, ""), "") == TreeVector.of(tree)

    def test_fork_becomes_twisted(self):
        result = swap_move(parse_tree("(L:P L:P):P"), "")
        assert result == TreeVector.of(parse_tree("(L:~P L:~P):~P"))

    def test_cap_is_fixed(self):
        cap = parse_tree("(L:P L:P):*")
        assert swap_move(cap, "") == TreeVector.of(cap)

    def test_vacuum_branch_transport(self):
        result = swap_move(parse_tree("((L:P L:P):* L:P):P"), "")
        assert result == TreeVector.of(parse_tree("(L:P (L:P L:P):*):P"))

    def test_not_virtual(self):
        with pytest.raises(NotVirtualCrossing):
            swap_move(parse_tree("(L:P L:P):P"), "", 1)


class TestBubbleAndTurnback:
    """거품과 되돌이"""

    def test_classical_bubble(self):
        c = constants()
        assert bubble_coefficient(P, P, P) == {P: c.Theta / c.Delta}

    def test_classical_bubble_at_one(self):
        value = bubble_coefficient(P, P, P)[P]
        assert value.evaluate(1) == pytest.approx(-1)

    def test_vacuum_bubble(self):
        assert bubble_coefficient(P, P, STAR) == {STAR: constants().Delta}

    def test_bubble_reduce_on_leaf_edge(self):
        c = constants()
        tree = parse_tree("(L:P L:P):P")
        assert bubble_reduce(tree, "L") == TreeVector.of(tree, c.Theta / c.Delta)

    def test_twisted_bubble_is_finite_combination(self):
        result = bubble_coefficient(P, P, P, twisted=True)
        assert set(result) <= {P, PTILDE}

    def test_turnback(self):
        tree = parse_tree("((L:P L:P):* L:P):P")
        assert turnback_reduce(tree, "LL").is_zero
        with pytest.raises(BadPosition):
            turnback_reduce(tree, "L")
