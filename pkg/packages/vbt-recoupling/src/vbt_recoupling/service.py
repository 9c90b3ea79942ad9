"""
재결합 계산 서비스

F, R, 가상 교환, 거품과 되돌이 축약, 세 가지 합성 규칙,
규칙 레지스트리와 병렬 인증, R 행렬 보고서를 제공합니다.
"""

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Dict, Iterator, List, Optional, Set, Tuple, Union

from vbt_diagrams import DiagramSum, compose, tensor
from vbt_scalars import ONE, Scalar, constants
from vbt_scalars.utils import ModuleIOLogger
from vbt_trees import (
    PARTICLE_ORDER,
    STRAND_COUNT,
    BadLocator,
    EdgeLabel,
    LabeledTree,
    Mode,
    ParticleLabel,
    TreeVector,
    canonicalize,
    channel_vertex_nonzero,
    edge_projector,
    expand,
    format_tree,
    fusion_allowed,
    junction,
    parse_tree,
    vector_from_channels,
    vector_to_channels,
)

from .engine import _note, left_associate, oracle_residual_free
from .exceptions import (
    BadPosition,
    NotClassicalCrossing,
    NotClassicalFragment,
    NotVirtualCrossing,
    PatternMismatch,
)
from .models import (
    Crossing,
    Direction,
    FConvention,
    LeftAssociation,
    LemmaReport,
    LocalRule,
    Provenance,
    RMatrixEntry,
    RMatrixReport,
    RewriteRule,
    RuleCertificate,
    TreeInput,
    VirtualBraidedTree,
)
from .rules import (
    CABLE_CHANNELS,
    CHANNELS,
    CLASSICAL_LABELS,
    bubble_coefficient,
    bubble_rule,
    classical_f_rule,
    classical_fragment_rule,
    classical_letter_rule,
    crossing_diagram,
    f_rule,
    fragment_rule,
    letter_rule,
    projector_rule,
    turnback_rule,
    vertex_eigenvalue,
    vertex_rule,
)

logger = logging.getLogger(__name__)

P, STAR, PTILDE = ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE

RULE_FAMILIES: Tuple[str, ...] = (
    "projector",
    "turnback",
    "bubble",
    "virtual-bubble",
    "r-move",
    "swap-move",
    "f-move",
    "braided-fragment",
    "lemma1",
    "lemma2",
    "lemma3",
)

# 피보나치 모형의 허용 꼭짓점 (고전 규칙 + (*, * → *))
_FIBONACCI_VERTICES = frozenset({(P, P, P), (P, P, STAR), (STAR, P, P), (P, STAR, P), (STAR, STAR, STAR)})

LEMMA1_DEFAULT = "(L:P (L:P L:P):~P):P"
LEMMA2_DEFAULT = "(L:P L:P):P"
LEMMA3_DEFAULT = "(L:P L:~P):P"

Pieces = List[Tuple[LabeledTree, Scalar]]


def _as_vector(v: TreeInput) -> TreeVector:
    if isinstance(v, LabeledTree):
        return TreeVector.of(v)
    return v


def _subtree(tree: LabeledTree, position: str) -> LabeledTree:
    try:
        return tree.subtree(position)
    except BadLocator as exc:
        raise BadPosition(position, format_tree(tree), exc.details.get("reason", "no such vertex")) from exc


def _vertex_at(tree: LabeledTree, position: str) -> LabeledTree:
    node = _subtree(tree, position)
    if node.is_leaf:
        raise BadPosition(position, format_tree(tree), "addresses a leaf, not a vertex")
    return node


def _fragment(tree: LabeledTree, position: str, forward: bool):
    """(X, Y, Z, 내부 라벨, 꼭짓점)"""
    node = _vertex_at(tree, position)
    if forward:
        if node.right.is_leaf:  # type: ignore[union-attr]
            raise BadPosition(position, format_tree(tree), "right branch is not internal")
        inner = node.right
        return node.left, inner.left, inner.right, inner.label, node  # type: ignore[union-attr]
    if node.left.is_leaf:  # type: ignore[union-attr]
        raise BadPosition(position, format_tree(tree), "left branch is not internal")
    inner = node.left
    return inner.left, inner.right, node.right, inner.label, node  # type: ignore[union-attr]


def _rebracketed(x, y, z, inner: EdgeLabel, out: EdgeLabel, forward: bool) -> LabeledTree:
    if forward:
        return LabeledTree(out, LabeledTree(inner, x, y), z)
    return LabeledTree(out, x, LabeledTree(inner, y, z))


def _unitary_terms(tree: LabeledTree, position: str, forward: bool) -> Pieces:
    x, y, z, inner, node = _fragment(tree, position, forward)
    labels = (x.label, y.label, z.label, inner, node.label)
    if any(label not in (P, STAR) for label in labels):
        raise NotClassicalFragment(format_tree(node))
    legs = (x.label, y.label, z.label, node.label)
    if all(label == P for label in legs):
        c = constants()
        matrix = {(P, P): c.a, (P, STAR): c.b, (STAR, P): c.g, (STAR, STAR): c.h}
        options = [(m, matrix[(m, inner)]) for m in (P, STAR)]
    else:
        if forward:
            allowed = [
                m for m in (P, STAR)
                if (x.label, y.label, m) in _FIBONACCI_VERTICES and (m, z.label, node.label) in _FIBONACCI_VERTICES
            ]
        else:
            allowed = [
                m for m in (P, STAR)
                if (y.label, z.label, m) in _FIBONACCI_VERTICES and (x.label, m, node.label) in _FIBONACCI_VERTICES
            ]
        options = [(allowed[0], ONE)] if len(allowed) == 1 else []
    return [
        (tree.replace(position, _rebracketed(x, y, z, m, node.label, forward)), coeff)
        for m, coeff in options
    ]


def _diagrammatic_terms(tree: LabeledTree, position: str, forward: bool, notes: Set[str]) -> Pieces:
    x, y, z, inner, node = _fragment(tree, position, forward)
    rule = _note(f_rule(x.label, y.label, z.label, inner, node.label, forward), notes)
    pieces: Pieces = []
    for fragment, coeff in rule.terms:
        new_inner = fragment.left.label if forward else fragment.right.label  # type: ignore[union-attr]
        pieces.append((tree.replace(position, _rebracketed(x, y, z, new_inner, node.label, forward)), coeff))
    return pieces


def f_move(
    v: TreeInput,
    position: str = "",
    direction: Union[Direction, str] = Direction.FORWARD,
    convention: Union[FConvention, str] = FConvention.UNITARY,
) -> TreeVector:
    """
    position 의 꼭짓점에서 재괄호한다.
    forward: (X (Y Z):f):c → Σ_m F[m][f] ((X Y):m Z):c, backward 는 그 반대 방향.

    unitary 규약은 P, * 조각에서 1/Δ, 1/√Δ, 1/√Δ, −1/Δ 행렬을 쓰고,
    diagrammatic 규약은 채널 기저에서 오라클로 구한 계수를 쓴다.
    """
    vector = _as_vector(v)
    forward = Direction(direction) == Direction.FORWARD
    pieces: Pieces = []
    if FConvention(convention) == FConvention.UNITARY:
        for tree, coeff in vector.items():
            pieces.extend((t, coeff * c) for t, c in _unitary_terms(tree, position, forward))
        return TreeVector.accumulate(pieces)

    for tree in vector:
        _fragment(tree, position, forward)
    notes: Set[str] = set()
    for tree, coeff in vector_to_channels(vector).items():
        pieces.extend((t, coeff * c) for t, c in _diagrammatic_terms(tree, position, forward, notes))
    if notes:
        logger.info("f_move used %d uncertified channel rule(s)", len(notes))
    return vector_from_channels(TreeVector.accumulate(pieces))


def _classical_sign(sign: Crossing) -> int:
    if sign in (1, "1", "+1", "+", "positive"):
        return 1
    if sign in (-1, "-1", "-", "negative"):
        return -1
    raise NotClassicalCrossing(sign)


def _crossing_move(vector: TreeVector, position: str, kind: str, sign: int) -> TreeVector:
    """
    꼭짓점의 두 가지를 반 바퀴 꼬아(가지 순서가 바뀜) 생긴 교차를 없앤다:
    (T1 T2):c → Σ λ · (T2 T1):c, λ 는 채널별 고유값.
    """
    for tree in vector:
        _vertex_at(tree, position)
    pieces: Pieces = []
    for tree, coeff in vector_to_channels(vector).items():
        node = tree.subtree(position)
        left, right = node.left, node.right
        value, certified = vertex_eigenvalue(kind, sign, right.label, left.label, node.label)  # type: ignore[union-attr,arg-type]
        if not certified:
            logger.warning("crossing rule at %s is not certified", format_tree(node))
        if value:
            pieces.append((tree.replace(position, LabeledTree(node.label, right, left)), coeff * value))
    return vector_from_channels(TreeVector.accumulate(pieces))


def r_move(v: TreeInput, position: str, sign: Crossing) -> TreeVector:
    """고전 교차 제거. 음의 교차에서 (P P):* ↦ A⁸, (P P):P ↦ −A⁴"""
    return _crossing_move(_as_vector(v), position, "s", _classical_sign(sign))


def swap_move(v: TreeInput, position: str, crossing: Crossing = "virtual") -> TreeVector:
    """가상 교차 제거; 두 번 적용하면 항등"""
    if crossing not in ("virtual", "v"):
        raise NotVirtualCrossing(crossing)
    return _crossing_move(_as_vector(v), position, "v", 1)


def bubble_reduce(
    v: TreeInput,
    position: str,
    inner: Tuple[ParticleLabel, ParticleLabel] = (P, P),
    twisted: bool = False,
) -> TreeVector:
    """position 간선 위의 거품(내부 라벨 inner)을 곧은 간선으로 바꾼다"""
    pieces: Pieces = []
    for tree, coeff in _as_vector(v).items():
        edge = _subtree(tree, position)
        if not isinstance(edge.label, ParticleLabel):
            raise BadPosition(position, format_tree(tree), "bubbles are reduced on decorated edges")
        for label, value in bubble_coefficient(inner[0], inner[1], edge.label, twisted).items():
            relabeled = tree.replace(position, edge.relabel(label))
            pieces.append((canonicalize(relabeled), coeff * value))
    return TreeVector.accumulate(pieces)


def turnback_reduce(v: TreeInput, position: str) -> TreeVector:
    """사영된 케이블의 되돌이는 0"""
    for tree in _as_vector(v):
        edge = _subtree(tree, position)
        if STRAND_COUNT[edge.label] != 2:
            raise BadPosition(position, format_tree(tree), "no projected cable at this edge")
    return TreeVector()


def _lemma_input(tree: Optional[Union[LabeledTree, str]], default: str) -> LabeledTree:
    if tree is None:
        return parse_tree(default)
    if isinstance(tree, str):
        return parse_tree(tree)
    return tree


def _lemma1_tree(tree: Optional[Union[LabeledTree, str]]) -> LabeledTree:
    tree = _lemma_input(tree, LEMMA1_DEFAULT)
    ok = (
        tree.leaf_count == 3
        and tree.is_particle_tree()
        and tree.left.is_leaf  # type: ignore[union-attr]
        and not tree.right.is_leaf  # type: ignore[union-attr]
        and tree.right.label == PTILDE  # type: ignore[union-attr]
        and tree.leaves() == [P, P, P]
        and tree.label == P
    )
    if not ok:
        raise PatternMismatch("lemma1", format_tree(tree), LEMMA1_DEFAULT)
    return tree


def _lemma2_tree(tree: Optional[Union[LabeledTree, str]]) -> LabeledTree:
    tree = _lemma_input(tree, LEMMA2_DEFAULT)
    if tree.leaf_count != 2 or tree.leaves() != [P, P] or tree.label not in (P, STAR):
        raise PatternMismatch("lemma2", format_tree(tree), "(L:P L:P):c with c in {P, *}")
    return tree


def _lemma3_tree(tree: Optional[Union[LabeledTree, str]]) -> LabeledTree:
    tree = _lemma_input(tree, LEMMA3_DEFAULT)
    cables = all(STRAND_COUNT[label] == 2 for label in tree.leaves())
    if tree.leaf_count != 2 or not tree.is_particle_tree() or not cables or PTILDE not in tree.edges():
        raise PatternMismatch("lemma3", format_tree(tree), "a two-leaf tree with a ~P edge")
    return tree


def _left_bubble_weights() -> Dict[ParticleLabel, Scalar]:
    """재괄호 뒤 맨 왼쪽 가지에 남은 거품을 곧은 P, P̃ 잎으로 바꾸는 계수"""
    c = constants()
    return {
        P: c.h * c.h - c.d * c.g,
        PTILDE: (c.d - 1) * (ONE - c.h * c.h),
    }


def lemma1_rule(tree: Optional[Union[LabeledTree, str]] = None) -> TreeVector:
    """
    오른쪽 결합 3잎 트리의 P̃ 내부 간선을 왼쪽 빗 네 항으로.

    가상 거품 계산으로 P̃ 간선을 * 간선과 왼쪽 가지의 거품으로 옮기고,
    유니터리 F 의 * 열(h, g)로 재괄호한 뒤 거품을 축약한다.
    결과 계수는 c1 = h³ − dgh, c2 = (d−1)(h − h³), c3 = h²g − dg², c4 = (d−1)(g − gh²) 이다.
    """
    source = _lemma1_tree(tree)
    bubbled = source.replace("R", source.right.relabel(STAR))  # type: ignore[union-attr]
    weights = _left_bubble_weights()
    pieces: Pieces = []
    for comb, f_coeff in f_move(bubbled, "", Direction.FORWARD, FConvention.UNITARY).items():
        first = comb.subtree("LL")
        for label, weight in weights.items():
            pieces.append((canonicalize(comb.replace("LL", first.relabel(label))), f_coeff * weight))
    return TreeVector.accumulate(pieces)


def _lemma2_source(tree: LabeledTree, sign: int) -> VirtualBraidedTree:
    return VirtualBraidedTree((("s", 1, sign), ("v", 1, 1)), tree)


def lemma2_rule(tree: Optional[Union[LabeledTree, str]] = None, sign: Crossing = 1) -> TreeVector:
    """가상 교차 다음 고전 교차가 놓인 두 잎 꼭짓점 (단어 s1 v1)"""
    source = _lemma2_source(_lemma2_tree(tree), _classical_sign(sign))
    return left_associate(source).vector


def lemma3_rule(tree: Optional[Union[LabeledTree, str]] = None, sign: Crossing = 1) -> TreeVector:
    """P̃ 가지를 가진 두 잎 꼭짓점 위의 고전 교차"""
    return r_move(_lemma3_tree(tree), "", sign)


def _expansion(vector: TreeVector) -> DiagramSum:
    total = DiagramSum()
    for tree, coeff in vector.items():
        total = total + expand(tree, check=False).scale(coeff)
    return total


def _half_twist_element(tree: LabeledTree, sign: int) -> DiagramSum:
    """(T1 T2):c 의 두 가지를 반 바퀴 꼰 원소 (꼭짓점, 교차, T2 ⊗ T1 순)"""
    left, right, out = tree.vertex
    vertex = compose(edge_projector(out), junction(STRAND_COUNT[right], STRAND_COUNT[left], STRAND_COUNT[out]))
    crossed = compose(vertex, crossing_diagram("s", sign))
    return compose(crossed, tensor(expand(tree.right, check=False), expand(tree.left, check=False)))  # type: ignore[arg-type]


def lemma_rule(name: str, tree: Optional[Union[LabeledTree, str]] = None, sign: Crossing = 1) -> LocalRule:
    """합성 규칙 하나를 적용하고 오라클로 직접 확인한다"""
    if name == "lemma1":
        source = _lemma1_tree(tree)
        vector = lemma1_rule(source)
        certified = expand(source) == _expansion(vector)
    elif name == "lemma2":
        source = _lemma2_tree(tree)
        vector = lemma2_rule(source, sign)
        certified = oracle_residual_free(_lemma2_source(source, _classical_sign(sign)), vector)
    elif name == "lemma3":
        source = _lemma3_tree(tree)
        vector = lemma3_rule(source, sign)
        certified = _half_twist_element(source, _classical_sign(sign)) == _expansion(vector)
    else:
        raise ValueError(f"unknown lemma '{name}'")
    return LocalRule(
        family=name,
        key=format_tree(source),
        terms=tuple(vector.sorted_items()),
        certified=certified,
        rhs_terms=len(vector),
    )


def lemma_report(name: str, tree: Optional[Union[LabeledTree, str]] = None) -> LemmaReport:
    """결과 계수를 c1..c4 와 비교한 보고서"""
    rule = lemma_rule(name, tree)
    named = {key: value for key, value in constants().as_dict().items() if key in ("c1", "c2", "c3", "c4")}
    matches = {
        key: [format_tree(t) for t, coeff in rule.terms if coeff == value]
        for key, value in named.items()
    }
    return LemmaReport(
        rule=name,
        input=rule.key,
        terms=rule.coefficient_map(),
        certified=rule.certified,
        named_matches={key: trees for key, trees in matches.items() if trees},
    )


def _registry_entries() -> Iterator[RewriteRule]:
    cable_labels = (P, PTILDE, CABLE_CHANNELS[0], CABLE_CHANNELS[1])
    for lower, upper in itertools.product(cable_labels, repeat=2):
        yield RewriteRule("projector", f"{lower.value} then {upper.value}", Provenance.STATED,
                          partial(projector_rule, lower, upper))
    for label in cable_labels:
        yield RewriteRule("turnback", label.value, Provenance.STATED, partial(turnback_rule, label))
    for l, r, c in itertools.product(PARTICLE_ORDER, repeat=3):
        if fusion_allowed(l, r, c, Mode.CLASSICAL):
            yield RewriteRule("bubble", f"({l.value} {r.value}):{c.value}", Provenance.STATED,
                              partial(bubble_rule, l, r, c, False))
        if fusion_allowed(l, r, c, Mode.VIRTUAL) and STRAND_COUNT[l] == STRAND_COUNT[r] == 2:
            yield RewriteRule("virtual-bubble", f"({l.value} {r.value}):{c.value}", Provenance.DERIVED,
                              partial(bubble_rule, l, r, c, True))
    for a, b, c in itertools.product(CHANNELS, repeat=3):
        if not channel_vertex_nonzero(a, b, c):
            continue
        for sign in (1, -1):
            yield RewriteRule("r-move", f"{'+' if sign > 0 else '-'} ({a.value} {b.value}):{c.value}",
                              Provenance.STATED, partial(vertex_rule, "s", sign, a, b, c))
        yield RewriteRule("swap-move", f"({a.value} {b.value}):{c.value}", Provenance.DERIVED,
                          partial(vertex_rule, "v", 1, a, b, c))
    for x, y, z, f, c in itertools.product(CHANNELS, repeat=5):
        if channel_vertex_nonzero(y, z, f) and channel_vertex_nonzero(x, f, c):
            yield RewriteRule("f-move", f"({x.value} ({y.value} {z.value}):{f.value}):{c.value}",
                              Provenance.DERIVED, partial(f_rule, x, y, z, f, c, True))
    for kind, sign in (("s", 1), ("s", -1), ("v", 1)):
        tag = "v" if kind == "v" else ("s+" if sign > 0 else "s-")
        for x, y, c in itertools.product(CABLE_CHANNELS, CABLE_CHANNELS, CHANNELS):
            if channel_vertex_nonzero(x, y, c):
                yield RewriteRule("braided-fragment", f"{tag} ({x.value} {y.value}):{c.value}",
                                  Provenance.DERIVED, partial(letter_rule, kind, sign, x, y, c))
        for e, x, m, y, c in itertools.product(CHANNELS, CABLE_CHANNELS, CHANNELS, CABLE_CHANNELS, CHANNELS):
            if channel_vertex_nonzero(e, x, m) and channel_vertex_nonzero(m, y, c):
                yield RewriteRule(
                    "braided-fragment",
                    f"{tag} (({e.value} {x.value}):{m.value} {y.value}):{c.value}",
                    Provenance.DERIVED,
                    partial(fragment_rule, kind, sign, e, x, m, y, c),
                )
    for x, y, z, f, c in itertools.product(CLASSICAL_LABELS, repeat=5):
        if fusion_allowed(y, z, f, Mode.CLASSICAL) and fusion_allowed(x, f, c, Mode.CLASSICAL):
            yield RewriteRule("f-move", f"classical ({x.value} ({y.value} {z.value}):{f.value}):{c.value}",
                              Provenance.DERIVED, partial(classical_f_rule, x, y, z, f, c, True))
    for sign in (1, -1):
        tag = "s+" if sign > 0 else "s-"
        for c in CLASSICAL_LABELS:
            yield RewriteRule("braided-fragment", f"classical {tag} (P P):{c.value}",
                              Provenance.DERIVED, partial(classical_letter_rule, sign, P, P, c))
        for e, m, c in itertools.product(CLASSICAL_LABELS, repeat=3):
            if fusion_allowed(e, P, m, Mode.CLASSICAL) and fusion_allowed(m, P, c, Mode.CLASSICAL):
                yield RewriteRule(
                    "braided-fragment",
                    f"classical {tag} (({e.value} P):{m.value} P):{c.value}",
                    Provenance.DERIVED,
                    partial(classical_fragment_rule, sign, e, P, m, P, c),
                )
    yield RewriteRule("lemma1", LEMMA1_DEFAULT, Provenance.DERIVED, partial(lemma_rule, "lemma1"))
    for text in (LEMMA2_DEFAULT, "(L:P L:P):*"):
        yield RewriteRule("lemma2", text, Provenance.DERIVED, partial(lemma_rule, "lemma2", text))
    for text in (LEMMA3_DEFAULT, "(L:~P L:~P):~P", "(L:P L:~P):*"):
        yield RewriteRule("lemma3", text, Provenance.DERIVED, partial(lemma_rule, "lemma3", text))


def rule_registry(family: Optional[str] = None) -> List[RewriteRule]:
    if family is not None and family not in RULE_FAMILIES:
        raise ValueError(f"unknown rule family '{family}' (expected one of {', '.join(RULE_FAMILIES)})")
    return [rule for rule in _registry_entries() if family is None or rule.family == family]


def _certify_one(entry: RewriteRule) -> RuleCertificate:
    start = time.time()
    rule = entry.synthesize()
    return RuleCertificate(
        family=entry.family,
        instance=entry.instance,
        provenance=entry.provenance,
        certified=rule.certified,
        coefficients=rule.coefficient_map(),
        lhs_terms=rule.lhs_terms,
        rhs_terms=rule.rhs_terms,
        residual_terms=rule.residual_terms,
        execution_time_seconds=time.time() - start,
    )


def certify(family: Optional[str] = None, max_workers: int = 4) -> List[RuleCertificate]:
    """레지스트리의 규칙 인스턴스를 병렬로 인증한다 (결과 순서는 레지스트리 순서)"""
    entries = rule_registry(family)
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        return list(executor.map(_certify_one, entries))


def _monomial_exponent(value: Scalar, bound: int = 24) -> Optional[int]:
    for k in range(-bound, bound + 1):
        if value == Scalar.monomial(k):
            return k
    return None


def r_matrix_report() -> RMatrixReport:
    """두 잎 섹터에서 오라클 R 고유값과 닫힌 식 diag(A⁸, −A⁴) (음의 교차) 비교"""
    expected: Dict[int, Dict[ParticleLabel, Scalar]] = {
        -1: {STAR: Scalar.monomial(8), P: Scalar.monomial(4, -1)},
        1: {STAR: Scalar.monomial(-8), P: Scalar.monomial(-4, -1)},
    }
    found: Dict[Tuple[int, ParticleLabel], Scalar] = {}
    exponents: Dict[Tuple[int, ParticleLabel], Optional[int]] = {}
    for sign in (-1, 1):
        for root in (STAR, P):
            tree = parse_tree(f"(L:P L:P):{root.value}")
            value = r_move(tree, "", sign).coefficient(tree)
            found[(sign, root)] = value
            exponents[(sign, root)] = _monomial_exponent(value / expected[sign][root]) if value else None
    distinct = set(exponents.values())
    framing = distinct.pop() if len(distinct) == 1 else None
    entries = [
        RMatrixEntry(
            sign=sign,
            root=root.value,
            oracle=str(found[(sign, root)]),
            expected=str(expected[sign][root]),
            matches=framing is not None and exponents[(sign, root)] == framing,
        )
        for sign, root in found
    ]
    ratio = found[(-1, STAR)] / found[(-1, P)]
    return RMatrixReport(
        entries=entries,
        framing_exponent=framing,
        ratio=str(ratio),
        ratio_matches=ratio == Scalar.monomial(4, -1),
    )


class RecouplingService:
    """재결합 계산 서비스"""

    def __init__(self, max_workers: int = 4, verify: bool = False) -> None:
        self.max_workers = max_workers
        self.verify = verify
        self.io_logger = ModuleIOLogger("RecouplingService")

    def left_associate(self, source: VirtualBraidedTree, verify: Optional[bool] = None) -> LeftAssociation:
        self.io_logger.log_input(
            "left_associate", tree=format_tree(source.tree), letters=len(source.letters)
        )
        start = time.time()
        try:
            result = left_associate(source, self.verify if verify is None else verify)
        except Exception as exc:
            self.io_logger.log_error("left_associate", exc, time.time() - start)
            raise
        self.io_logger.log_output("left_associate", result, time.time() - start)
        return result

    def f_move(
        self,
        v: TreeInput,
        position: str = "",
        direction: Union[Direction, str] = Direction.FORWARD,
        convention: Union[FConvention, str] = FConvention.UNITARY,
    ) -> TreeVector:
        return f_move(v, position, direction, convention)

    def r_move(self, v: TreeInput, position: str, sign: Crossing) -> TreeVector:
        return r_move(v, position, sign)

    def swap_move(self, v: TreeInput, position: str) -> TreeVector:
        return swap_move(v, position)

    def bubble_reduce(
        self, v: TreeInput, position: str, inner: Tuple[ParticleLabel, ParticleLabel] = (P, P), twisted: bool = False
    ) -> TreeVector:
        return bubble_reduce(v, position, inner, twisted)

    def turnback_reduce(self, v: TreeInput, position: str) -> TreeVector:
        return turnback_reduce(v, position)

    def rule_registry(self, family: Optional[str] = None) -> List[RewriteRule]:
        return rule_registry(family)

    def certify(self, family: Optional[str] = None) -> List[RuleCertificate]:
        self.io_logger.log_input("certify", family=family, max_workers=self.max_workers)
        start = time.time()
        certificates = certify(family, self.max_workers)
        failed = sum(1 for c in certificates if not c.certified)
        logger.info("certified %d rule instance(s), %d without exact certificate", len(certificates), failed)
        self.io_logger.log_output("certify", execution_time=time.time() - start)
        return certificates

    def r_matrix_report(self) -> RMatrixReport:
        return r_matrix_report()

    def lemma_report(self, name: str, tree: Optional[Union[LabeledTree, str]] = None) -> LemmaReport:
        return lemma_report(name, tree)
