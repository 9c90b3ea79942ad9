"""
트리 모델과 문법 테스트
"""

import pytest

from vbt_trees import (
    BadLocator,
    Channel,
    LabeledTree,
    Leaf,
    Node,
    ParticleLabel,
    TreeSyntaxError,
    TreeVector,
    format_tree,
    is_left_comb,
    left_comb,
    parse_shape,
    parse_tree,
    parse_tree_or_shape,
)
from vbt_scalars import Scalar

P, STAR, PTILDE = ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE


class TestShapes:
    """트리 모양"""

    def test_left_comb(self):
        assert left_comb(1) == Leaf()
        assert left_comb(3) == Node(Node(Leaf(), Leaf()), Leaf())
        assert left_comb(4).leaf_count == 4
        assert is_left_comb(left_comb(5))
        assert not is_left_comb(Node(Leaf(), Node(Leaf(), Leaf())))

    def test_zero_leaves(self):
        with pytest.raises(ValueError):
            left_comb(0)

    def test_label_values_do_not_clash(self):
        assert P == "P"
        assert Channel.SYM != P
        assert len({*ParticleLabel, *Channel}) == 6


class TestGrammar:
    """트리 문법"""

    def test_labeled_round_trip(self):
        text = "((L:P L:P):* L:P):P"
        tree = parse_tree(text)
        assert tree.label == P
        assert tree.left.label == STAR
        assert format_tree(tree) == text

    def test_twisted_and_channel_labels(self):
        tree = parse_tree("(L:~P L:sym):vac")
        assert tree.vertex == (PTILDE, Channel.SYM, Channel.VAC)

    def test_whitespace_tolerated(self):
        assert parse_tree(" ( L:P   L:P ) :* ") == parse_tree("(L:P L:P):*")

    def test_bare_shape(self):
        assert parse_shape("((L L) L)") == left_comb(3)
        assert parse_tree_or_shape("(L (L L))") == Node(Leaf(), Node(Leaf(), Leaf()))
        assert str(left_comb(3)) == "((L L) L)"

    def test_partial_labels_rejected(self):
        with pytest.raises(TreeSyntaxError) as info:
            parse_tree("(L:P L):P")
        assert info.value.details["position"] == 6

    def test_unknown_label_position(self):
        with pytest.raises(TreeSyntaxError) as info:
            parse_tree("(L:P L:Q):P")
        assert info.value.details["position"] == 7

    def test_unbalanced(self):
        with pytest.raises(TreeSyntaxError):
            parse_shape("((L L) L")
        with pytest.raises(TreeSyntaxError):
            parse_shape("(L L) L")

    def test_expected_kind(self):
        with pytest.raises(TreeSyntaxError):
            parse_tree("(L L)")
        with pytest.raises(TreeSyntaxError):
            parse_shape("(L:P L:P):P")


class TestLabeledTree:
    """LabeledTree 조작"""

    def setup_method(self):
        self.tree = parse_tree("((L:P L:P):* L:P):P")

    def test_edges_post_order(self):
        assert self.tree.edges() == [P, P, STAR, P, P]
        assert self.tree.leaves() == [P, P, P]

    def test_vertices_and_locators(self):
        locators = [loc for loc, _ in self.tree.vertices()]
        assert locators == ["L", ""]
        assert self.tree.subtree("L").label == STAR
        assert self.tree.subtree("LR").is_leaf

    def test_replace(self):
        replaced = self.tree.replace("L", self.tree.subtree("L").relabel(P))
        assert format_tree(replaced) == "((L:P L:P):P L:P):P"

    def test_bad_locator(self):
        with pytest.raises(BadLocator):
            self.tree.subtree("RL")
        with pytest.raises(BadLocator):
            self.tree.replace("X", self.tree)

    def test_half_node_rejected(self):
        with pytest.raises(ValueError):
            LabeledTree(P, LabeledTree(P), None)


class TestTreeVector:
    """TreeVector 연산"""

    def test_zero_terms_dropped(self):
        a, b = parse_tree("(L:P L:P):P"), parse_tree("(L:P L:P):*")
        v = TreeVector({a: 1, b: 0})
        assert len(v) == 1
        assert (v - TreeVector.of(a)).is_zero

    def test_scale_and_sum(self):
        a = parse_tree("(L:P L:P):P")
        v = TreeVector.of(a, 2) + 3 * TreeVector.of(a)
        assert v.coefficient(a) == Scalar(5)
        assert v == TreeVector.of(a, 5)

    def test_sorted_text(self):
        a, b = parse_tree("(L:P L:P):P"), parse_tree("(L:P L:P):*")
        v = TreeVector({a: 1, b: 2})
        assert v.to_text() == "(2) (L:P L:P):* + (1) (L:P L:P):P"
