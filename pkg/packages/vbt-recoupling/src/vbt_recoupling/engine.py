"""
왼쪽 결합 엔진

(1) 오른쪽 척추를 따라 F 로 왼쪽 빗까지 재괄호하고
(2) 땋임 글자를 트리에 가까운 것(마지막 글자)부터 국소 규칙으로 흡수한다.
가상 교차나 P̃ 간선이 있으면 채널 기저(sym, alt, vac)에서 계산하고,
P, * 트리 위의 고전 단어는 P, * 규칙만으로 계산해 라벨이 P, * 밖으로 나가지 않는다.
각 단계는 입력 트리 하나당 유한 번이며, 사용한 규칙 중 인증되지 않은 것은
notes 에 모인다.
"""

import logging
from typing import Callable, List, Optional, Sequence, Set, Tuple

from vbt_diagrams import DiagramSum, braid_diagram, compose, reduce_turnbacks
from vbt_scalars import ONE, Scalar
from vbt_trees import (
    LabeledTree,
    TreeVector,
    check_admissible,
    expand,
    format_tree,
    vector_from_channels,
    vector_to_channels,
)

from .exceptions import BadPosition
from .models import LeftAssociation, Letter, LocalRule, VirtualBraidedTree
from .rules import (
    CLASSICAL_LABELS,
    classical_f_rule,
    classical_fragment_rule,
    classical_letter_rule,
    f_rule,
    fragment_rule,
    letter_rule,
)

logger = logging.getLogger(__name__)

Notes = Optional[Set[str]]
Pieces = List[Tuple[LabeledTree, Scalar]]
FRule = Callable[..., LocalRule]


def _note(rule: LocalRule, notes: Notes) -> LocalRule:
    if notes is not None and not rule.certified:
        notes.add(f"{rule.family}: {rule.key}")
    return rule


def is_classical(vector: TreeVector, letters: Sequence[Letter] = ()) -> bool:
    """모든 간선이 P, * 이고 모든 글자가 고전 교차인지"""
    labels = all(label in CLASSICAL_LABELS for tree in vector for label in tree.edges())
    return labels and all(kind == "s" for kind, _, _ in letters)


def comb_join(left: LabeledTree, right: LabeledTree, label, notes: Notes = None, rule_for: FRule = f_rule) -> Pieces:
    """
    두 왼쪽 빗을 label 로 이은 트리를 왼쪽 빗들의 결합으로.
    right = (inner z):f 이면 (left (inner z):f) → Σ_m ((left inner):m z) 로 한 칸씩 옮긴다.
    """
    if right.is_leaf:
        return [(LabeledTree(label, left, right), ONE)]
    inner, z = right.left, right.right
    rule = _note(rule_for(left.label, inner.label, z.label, right.label, label, True), notes)  # type: ignore[union-attr]
    pieces: Pieces = []
    for fragment, coeff in rule.terms:
        mid = fragment.left.label  # type: ignore[union-attr]
        for comb, c2 in comb_join(left, inner, mid, notes, rule_for):  # type: ignore[arg-type]
            pieces.append((LabeledTree(label, comb, z), coeff * c2))
    return pieces


def to_left_comb(tree: LabeledTree, notes: Notes = None, rule_for: FRule = f_rule) -> Pieces:
    """트리를 같은 잎 순서의 왼쪽 빗 결합으로"""
    if tree.is_leaf:
        return [(tree, ONE)]
    pieces: Pieces = []
    for left, c1 in to_left_comb(tree.left, notes, rule_for):  # type: ignore[arg-type]
        for right, c2 in to_left_comb(tree.right, notes, rule_for):  # type: ignore[arg-type]
            for comb, c3 in comb_join(left, right, tree.label, notes, rule_for):
                pieces.append((comb, c1 * c2 * c3))
    return pieces


def rebracket(vector: TreeVector, notes: Notes = None, classical: bool = False) -> TreeVector:
    rule_for = classical_f_rule if classical else f_rule
    pieces: Pieces = []
    for tree, coeff in vector.items():
        pieces.extend((comb, coeff * c) for comb, c in to_left_comb(tree, notes, rule_for))
    return TreeVector.accumulate(pieces)


def _apply_crossing(
    tree: LabeledTree,
    kind: str,
    sign: int,
    index: int,
    notes: Notes,
    classical: bool = False,
) -> Pieces:
    n = tree.leaf_count
    if not 1 <= index < n:
        raise BadPosition(f"{kind}{index}", format_tree(tree), f"letter index must lie in 1..{n - 1}")
    if index == 1:
        locator = "L" * (n - 2)
        x, y, out = tree.subtree(locator).vertex
        if classical:
            rule = classical_letter_rule(sign, x, y, out)  # type: ignore[arg-type]
        else:
            rule = letter_rule(kind, sign, x, y, out)  # type: ignore[arg-type]
        rule = _note(rule, notes)
        return [(tree.replace(locator, fragment), coeff) for fragment, coeff in rule.terms]
    locator = "L" * (n - index - 1)
    upper = tree.subtree(locator)
    lower = upper.left
    e_tree = lower.left  # type: ignore[union-attr]
    labels = (
        e_tree.label,  # type: ignore[union-attr]
        lower.right.label,  # type: ignore[union-attr]
        lower.label,  # type: ignore[union-attr]
        upper.right.label,  # type: ignore[union-attr]
        upper.label,
    )
    if classical:
        rule = classical_fragment_rule(sign, *labels)  # type: ignore[arg-type]
    else:
        rule = fragment_rule(kind, sign, *labels)  # type: ignore[arg-type]
    rule = _note(rule, notes)
    pieces: Pieces = []
    for fragment, coeff in rule.terms:
        inner = fragment.left
        rebuilt = LabeledTree(
            fragment.label,
            LabeledTree(inner.label, e_tree, inner.right),  # type: ignore[union-attr]
            fragment.right,
        )
        pieces.append((tree.replace(locator, rebuilt), coeff))
    return pieces


def apply_letter(vector: TreeVector, letter: Letter, notes: Notes = None, classical: bool = False) -> TreeVector:
    """왼쪽 빗 결합 위에 글자 하나를 얹고 다시 왼쪽 빗으로"""
    kind, index, power = letter
    if kind == "v":
        steps, sign = power % 2, 1
    else:
        steps, sign = abs(power), (1 if power > 0 else -1)
    for _ in range(steps):
        pieces: Pieces = []
        for tree, coeff in vector.items():
            pieces.extend((t, coeff * c) for t, c in _apply_crossing(tree, kind, sign, index, notes, classical))
        vector = TreeVector.accumulate(pieces)
    return vector


def apply_word(vector: TreeVector, letters, notes: Notes = None, classical: bool = False) -> TreeVector:
    """
    장식 트리 결합 위에 땋임 단어를 얹은 원소를 장식 왼쪽 빗 결합으로.
    첫 글자가 맨 위이므로 마지막 글자부터 흡수한다.
    classical 이면 입력이 P, * 트리와 고전 글자뿐이어야 하고 P, * 규칙만 쓴다.
    """
    letters = list(letters)
    if classical:
        if not is_classical(vector, letters):
            raise ValueError("the classical path needs P, * trees and classical letters only")
        combs = rebracket(vector, notes, classical=True)
        for letter in reversed(letters):
            combs = apply_letter(combs, letter, notes, classical=True)
        return combs
    channels = rebracket(vector_to_channels(vector), notes)
    for letter in reversed(letters):
        channels = apply_letter(channels, letter, notes)
    return vector_from_channels(channels)


def oracle_residual_free(source: VirtualBraidedTree, result: TreeVector) -> bool:
    """입력과 결과의 전개를 되돌이 항을 버린 뒤 비교한다"""
    n = source.strands
    lhs = compose(expand(source.tree), braid_diagram(source.letters, n, cable_width=2))
    rhs = DiagramSum()
    for tree, coeff in result.items():
        rhs = rhs + expand(tree, check=False).scale(coeff)
    cables = [(2 * k, 2 * k + 1) for k in range(n)]
    return reduce_turnbacks(lhs, cables) == reduce_turnbacks(rhs, cables)


def left_associate(source: VirtualBraidedTree, verify: bool = False) -> LeftAssociation:
    """고전 입력은 P, * 규칙으로, 그 밖의 입력은 채널 규칙으로 왼쪽 결합한다"""
    check_admissible(source.tree)
    notes: Set[str] = set()
    start = TreeVector.of(source.tree)
    vector = apply_word(start, source.letters, notes, classical=is_classical(start, source.letters))
    result = LeftAssociation(vector=vector, uncertified=sorted(notes))
    if verify:
        result.verified = oracle_residual_free(source, vector)
    if result.uncertified:
        logger.info(
            "left association of %s used %d uncertified rule(s)",
            format_tree(source.tree),
            len(result.uncertified),
        )
    return result
