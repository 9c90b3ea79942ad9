"""
오라클 유도 국소 규칙

모든 규칙은 채널 기저(sym, alt, vac)에서 같은 방식으로 만든다.
lhs 원소를 다이어그램으로 전개하고, 후보 트리 b 마다 ⟨b, lhs⟩/⟨b, b⟩ 로
계수를 구한 뒤, lhs 와 Σ 계수·expand(b) 가 정확히 같은지를 인증서로 남긴다.
서로 다른 채널 트리는 쌍선형 형식에 대해 직교한다.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from vbt_diagrams import (
    DiagramSum,
    cable_crossing,
    cable_swap,
    compose,
    cupcap,
    embed,
    identity,
    mirror,
    projector2,
    tensor,
)
from vbt_scalars import Scalar
from vbt_trees import (
    STRAND_COUNT,
    Channel,
    EdgeLabel,
    LabeledTree,
    Mode,
    ParticleLabel,
    channel_vertex_nonzero,
    edge_projector,
    expand,
    format_tree,
    fusion_allowed,
    junction,
    pairing,
    pairing_with_diagram,
)

from .exceptions import SingularBasis
from .models import LocalRule

logger = logging.getLogger(__name__)

P, STAR, PTILDE = ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE
SYM, ALT, VAC = Channel.SYM, Channel.ALT, Channel.VAC
CHANNELS: Tuple[Channel, ...] = (SYM, ALT, VAC)
CABLE_CHANNELS: Tuple[Channel, ...] = (SYM, ALT)

_HALF = Scalar(1) / 2


def leaf(label: EdgeLabel) -> LabeledTree:
    return LabeledTree(label)


def node(left: LabeledTree, right: LabeledTree, label: EdgeLabel) -> LabeledTree:
    return LabeledTree(label, left, right)


def _nonzero(a: EdgeLabel, b: EdgeLabel, c: EdgeLabel) -> bool:
    return channel_vertex_nonzero(a, b, c)  # type: ignore[arg-type]


@lru_cache(maxsize=None)
def crossing_diagram(kind: str, sign: int) -> DiagramSum:
    """두 2가닥 케이블의 교차"""
    if kind == "v":
        return DiagramSum.of(cable_swap())
    return cable_crossing(sign)


def _leg_crossing(kind: str, sign: int, left: EdgeLabel, right: EdgeLabel) -> DiagramSum:
    # 0가닥 케이블과의 교차는 항등 수송
    width = STRAND_COUNT[left] + STRAND_COUNT[right]
    if STRAND_COUNT[left] and STRAND_COUNT[right]:
        return crossing_diagram(kind, sign)
    return identity(width)


def projectors(labels: Iterable[EdgeLabel]) -> DiagramSum:
    result = identity(0)
    for label in labels:
        result = tensor(result, edge_projector(label))
    return result


def _cable_projectors(count: int) -> DiagramSum:
    result = identity(0)
    for _ in range(count):
        result = tensor(result, projector2())
    return result


def synthesize(
    family: str,
    key: str,
    lhs: DiagramSum,
    candidates: Sequence[LabeledTree],
) -> LocalRule:
    """lhs 를 직교 후보 트리들로 사영하고 정확성을 확인한다"""
    terms: List[Tuple[LabeledTree, Scalar]] = []
    rhs = DiagramSum()
    for tree in candidates:
        norm = pairing(tree, tree)
        if not norm:
            if expand(tree, check=False).is_zero:
                continue
            raise SingularBasis(format_tree(tree))
        coeff = pairing_with_diagram(tree, lhs) / norm
        if coeff:
            terms.append((tree, coeff))
            rhs = rhs + expand(tree, check=False).scale(coeff)
    residual = lhs - rhs
    certified = residual.is_zero
    if certified:
        logger.debug("certified %s %s with %d terms", family, key, len(terms))
    else:
        logger.info("%s %s is not exact in the span (%d residual terms)", family, key, len(residual))
    return LocalRule(
        family=family,
        key=key,
        terms=tuple(terms),
        certified=certified,
        lhs_terms=len(lhs),
        rhs_terms=len(rhs),
        residual_terms=len(residual),
    )


@lru_cache(maxsize=None)
def f_rule(x: Channel, y: Channel, z: Channel, inner: Channel, out: Channel, forward: bool = True) -> LocalRule:
    """
    forward: (x (y z):inner):out → Σ_m ((x y):m z):out
    backward: ((x y):inner z):out → Σ_f (x (y z):f):out
    """
    if forward:
        lhs_tree = node(leaf(x), node(leaf(y), leaf(z), inner), out)
        candidates = [
            node(node(leaf(x), leaf(y), m), leaf(z), out)
            for m in CHANNELS
            if _nonzero(x, y, m) and _nonzero(m, z, out)
        ]
    else:
        lhs_tree = node(node(leaf(x), leaf(y), inner), leaf(z), out)
        candidates = [
            node(leaf(x), node(leaf(y), leaf(z), f), out)
            for f in CHANNELS
            if _nonzero(y, z, f) and _nonzero(x, f, out)
        ]
    key = f"{'forward' if forward else 'backward'} {format_tree(lhs_tree)}"
    return synthesize("f-move", key, expand(lhs_tree, check=False), candidates)


@lru_cache(maxsize=None)
def letter_rule(kind: str, sign: int, x: Channel, y: Channel, out: Channel) -> LocalRule:
    """두 잎 (x y):out 의 잎 위에 놓인 교차"""
    tree = node(leaf(x), leaf(y), out)
    lhs = compose(compose(expand(tree, check=False), crossing_diagram(kind, sign)), _cable_projectors(2))
    candidates = [
        node(leaf(a), leaf(b), out)
        for a in CABLE_CHANNELS
        for b in CABLE_CHANNELS
        if _nonzero(a, b, out)
    ]
    key = f"{kind}{'+' if sign > 0 else '-'} on leaves of {format_tree(tree)}"
    return synthesize("braided-fragment", key, lhs, candidates)


@lru_cache(maxsize=None)
def fragment_rule(
    kind: str,
    sign: int,
    e: Channel,
    x: Channel,
    mid: Channel,
    y: Channel,
    out: Channel,
) -> LocalRule:
    """((e x):mid y):out 에서 잎 x, y 위에 놓인 교차 → Σ ((e y'):m' x'):out"""
    tree = node(node(leaf(e), leaf(x), mid), leaf(y), out)
    width = STRAND_COUNT[e]
    local = embed(crossing_diagram(kind, sign), width, width + 4)
    tops = tensor(edge_projector(e), _cable_projectors(2))
    lhs = compose(compose(expand(tree, check=False), local), tops)
    candidates = [
        node(node(leaf(e), leaf(b), m), leaf(a), out)
        for b in CABLE_CHANNELS
        for m in CHANNELS
        for a in CABLE_CHANNELS
        if _nonzero(e, b, m) and _nonzero(m, a, out)
    ]
    key = f"{kind}{'+' if sign > 0 else '-'} on leaves 2,3 of {format_tree(tree)}"
    return synthesize("braided-fragment", key, lhs, candidates)


def vertex_element(kind: str, sign: int, left: Channel, right: Channel, out: Channel) -> DiagramSum:
    """꼭짓점 out 의 두 다리가 바로 위에서 교차하고, 그 위에 left, right 사영자가 놓인 원소"""
    vertex = compose(
        edge_projector(out),
        junction(STRAND_COUNT[left], STRAND_COUNT[right], STRAND_COUNT[out]),
    )
    crossed = compose(vertex, _leg_crossing(kind, sign, left, right))
    return compose(crossed, projectors((left, right)))


@lru_cache(maxsize=None)
def vertex_rule(kind: str, sign: int, left: Channel, right: Channel, out: Channel) -> LocalRule:
    """
    다리가 교차한 꼭짓점 → λ · (left right):out.
    left 는 교차 위쪽 왼편의 채널이다.
    """
    tree = node(leaf(left), leaf(right), out)
    family = "swap-move" if kind == "v" else "r-move"
    key = f"{kind}{'+' if sign > 0 else '-'} below {format_tree(tree)}"
    candidates = [tree] if _nonzero(left, right, out) else []
    return synthesize(family, key, vertex_element(kind, sign, left, right, out), candidates)


def vertex_eigenvalue(kind: str, sign: int, left: Channel, right: Channel, out: Channel) -> Tuple[Scalar, bool]:
    rule = vertex_rule(kind, sign, left, right, out)
    if not rule.terms:
        return Scalar(0), rule.certified
    return rule.terms[0][1], rule.certified


def bubble_element(l: EdgeLabel, r: EdgeLabel, out: EdgeLabel, twisted: bool = False) -> DiagramSum:
    """out 간선 위의 거품: 갈라졌다가 (twisted 면 가상 교차 후) 다시 합쳐진다"""
    lower = expand(node(leaf(l), leaf(r), out), check=False)
    if twisted:
        lower = compose(lower, _leg_crossing("v", 1, l, r))
        upper = node(leaf(r), leaf(l), out)
    else:
        upper = node(leaf(l), leaf(r), out)
    return compose(lower, mirror(expand(upper, check=False)))


@lru_cache(maxsize=None)
def bubble_rule(l: EdgeLabel, r: EdgeLabel, out: EdgeLabel, twisted: bool = False) -> LocalRule:
    family = "virtual-bubble" if twisted else "bubble"
    key = f"{'twisted ' if twisted else ''}({l.value} {r.value}):{out.value}"
    candidates = [leaf(c) for c in CABLE_CHANNELS] if STRAND_COUNT[out] == 2 else [leaf(VAC)]
    return synthesize(family, key, bubble_element(l, r, out, twisted), candidates)


def bubble_coefficient(
    l: ParticleLabel,
    r: ParticleLabel,
    out: ParticleLabel,
    twisted: bool = False,
) -> Dict[ParticleLabel, Scalar]:
    """
    out 간선 위의 거품 = Σ 계수 · (새 라벨의 곧은 간선).
    고전 거품 (P P):P 는 {P: Θ/Δ} 이다.
    """
    rule = bubble_rule(l, r, out, twisted)
    weights = {c: coeff for c, coeff in ((t.label, k) for t, k in rule.terms)}
    if STRAND_COUNT[out] == 0:
        value = weights.get(VAC, Scalar(0))
        return {STAR: value} if value else {}
    s, a = weights.get(SYM, Scalar(0)), weights.get(ALT, Scalar(0))
    result = {P: (s + a) * _HALF, PTILDE: (s - a) * _HALF}
    return {label: value for label, value in result.items() if value}


@lru_cache(maxsize=None)
def projector_rule(lower: EdgeLabel, upper: EdgeLabel) -> LocalRule:
    """두 간선 사영자의 합성 (멱등성, v² = 1)"""
    lhs = compose(edge_projector(lower), edge_projector(upper))
    key = f"{lower.value} then {upper.value}"
    return synthesize("projector", key, lhs, [leaf(c) for c in CABLE_CHANNELS])


@lru_cache(maxsize=None)
def turnback_rule(label: EdgeLabel) -> LocalRule:
    """사영된 케이블의 되돌이는 0"""
    lhs = compose(edge_projector(label), DiagramSum.of(cupcap()))
    return synthesize("turnback", f"turnback on {label.value}", lhs, [])


CLASSICAL_LABELS: Tuple[ParticleLabel, ...] = (P, STAR)


def _classical(a: EdgeLabel, b: EdgeLabel, c: EdgeLabel) -> bool:
    return fusion_allowed(a, b, c, Mode.CLASSICAL)  # type: ignore[arg-type]


@lru_cache(maxsize=None)
def classical_f_rule(
    x: ParticleLabel,
    y: ParticleLabel,
    z: ParticleLabel,
    inner: ParticleLabel,
    out: ParticleLabel,
    forward: bool = True,
) -> LocalRule:
    """P, * 조각의 F. 후보 내부 라벨도 P, * 뿐이다"""
    if forward:
        lhs_tree = node(leaf(x), node(leaf(y), leaf(z), inner), out)
        candidates = [
            node(node(leaf(x), leaf(y), m), leaf(z), out)
            for m in CLASSICAL_LABELS
            if _classical(x, y, m) and _classical(m, z, out)
        ]
    else:
        lhs_tree = node(node(leaf(x), leaf(y), inner), leaf(z), out)
        candidates = [
            node(leaf(x), node(leaf(y), leaf(z), f), out)
            for f in CLASSICAL_LABELS
            if _classical(y, z, f) and _classical(x, f, out)
        ]
    key = f"classical {'forward' if forward else 'backward'} {format_tree(lhs_tree)}"
    return synthesize("f-move", key, expand(lhs_tree, check=False), candidates)


@lru_cache(maxsize=None)
def classical_letter_rule(sign: int, x: ParticleLabel, y: ParticleLabel, out: ParticleLabel) -> LocalRule:
    """(x y):out 의 잎 위 고전 교차 → λ · (y x):out"""
    tree = node(leaf(x), leaf(y), out)
    crossed = compose(expand(tree, check=False), _leg_crossing("s", sign, x, y))
    lhs = compose(crossed, projectors((y, x)))
    key = f"s{'+' if sign > 0 else '-'} on leaves of {format_tree(tree)}"
    return synthesize("braided-fragment", key, lhs, [node(leaf(y), leaf(x), out)])


@lru_cache(maxsize=None)
def classical_fragment_rule(
    sign: int,
    e: ParticleLabel,
    x: ParticleLabel,
    mid: ParticleLabel,
    y: ParticleLabel,
    out: ParticleLabel,
) -> LocalRule:
    """((e x):mid y):out 의 잎 x, y 위 고전 교차 → Σ_m ((e y):m x):out"""
    tree = node(node(leaf(e), leaf(x), mid), leaf(y), out)
    width = STRAND_COUNT[e]
    local = embed(_leg_crossing("s", sign, x, y), width, width + STRAND_COUNT[x] + STRAND_COUNT[y])
    lhs = compose(compose(expand(tree, check=False), local), projectors((e, y, x)))
    candidates = [
        node(node(leaf(e), leaf(y), m), leaf(x), out)
        for m in CLASSICAL_LABELS
        if _classical(e, y, m) and _classical(m, x, out)
    ]
    key = f"s{'+' if sign > 0 else '-'} on leaves 2,3 of {format_tree(tree)}"
    return synthesize("braided-fragment", key, lhs, candidates)
