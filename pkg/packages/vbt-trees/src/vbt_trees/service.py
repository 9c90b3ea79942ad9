"""
융합 트리 서비스

허용성 판정, 다이어그램 전개, 쌍선형 형식과 그람 행렬, 라벨 열거,
채널 분해와 표준 장식형 변환을 제공합니다.
"""

import logging
import time
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from vbt_diagrams import (
    Diagram,
    DiagramSum,
    close,
    compose,
    cupcap,
    identity,
    mirror,
    projector2,
    tensor,
    virtual_transposition,
)
from vbt_scalars import RationalFn, Scalar, constants
from vbt_scalars.matrix import ScalarMatrix
from vbt_scalars.utils import ModuleIOLogger

from .exceptions import InadmissibleTree, ShapeMismatch
from .models import (
    PARTICLE_ORDER,
    STRAND_COUNT,
    Channel,
    EdgeLabel,
    LabeledTree,
    Leaf,
    Mode,
    ParticleLabel,
    TreeShape,
    TreeVector,
    format_tree,
    left_comb,
)

logger = logging.getLogger(__name__)

P, STAR, PTILDE = ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE
SYM, ALT, VAC = Channel.SYM, Channel.ALT, Channel.VAC

CLASSICAL_VERTICES = frozenset({(P, P, P), (P, P, STAR), (STAR, P, P), (P, STAR, P)})

# 꼭짓점 (왼쪽, 오른쪽 → 출력) 의 가닥 수 중 0이 아닌 접합이 있는 것
_STRAND_TRIPLES = frozenset({(2, 2, 2), (2, 2, 0), (0, 2, 2), (2, 0, 2), (0, 0, 0)})

Boundary = str  # "full" | "skeleton"


def toggle(label: ParticleLabel) -> ParticleLabel:
    """P ↔ P̃"""
    return PTILDE if label == P else P


def _strand_triple(a: EdgeLabel, b: EdgeLabel, c: EdgeLabel) -> Tuple[int, int, int]:
    return STRAND_COUNT[a], STRAND_COUNT[b], STRAND_COUNT[c]


@lru_cache(maxsize=None)
def junction(left: int, right: int, out: int) -> DiagramSum:
    """뿌리 케이블(아래)에서 두 자식 케이블(위)로 가는 삼가 접합"""
    if (left, right, out) == (2, 2, 2):
        return DiagramSum.of(Diagram.from_pairs(2, 4, [(0, 2), (1, 5), (3, 4)]))
    if (left, right, out) == (2, 2, 0):
        return DiagramSum.of(Diagram.from_pairs(0, 4, [(0, 3), (1, 2)]))
    if (left, right, out) in ((0, 2, 2), (2, 0, 2)):
        return identity(2)
    if (left, right, out) == (0, 0, 0):
        return DiagramSum.of(Diagram.empty())
    return DiagramSum()


@lru_cache(maxsize=None)
def edge_projector(label: EdgeLabel, skeleton: bool = False) -> DiagramSum:
    """
    간선 사영자. skeleton 이면 경계에서 사영자를 생략하고 꼬임 부분만 남긴다
    (맞은편이 같은 사영자를 가지고 있을 때만 정확하다).
    """
    if STRAND_COUNT[label] == 0:
        return DiagramSum.of(Diagram.empty())
    v = DiagramSum.of(virtual_transposition())
    if label == PTILDE:
        return v if skeleton else compose(v, projector2())
    if skeleton:
        return identity(2)
    if label == P:
        return projector2()
    half = Scalar(RationalFn(1, 2))
    if label == SYM:
        inv_d = constants().d.inverse()
        return (identity(2) + v).scale(half) - DiagramSum.of(cupcap(), inv_d)
    return (identity(2) - v).scale(half)


def fusion_allowed(
    a: ParticleLabel,
    b: ParticleLabel,
    out: ParticleLabel,
    mode: Union[Mode, str] = Mode.CLASSICAL,
) -> bool:
    """꼭짓점 (a, b → out) 의 허용 여부"""
    if Mode(mode) == Mode.CLASSICAL:
        return (a, b, out) in CLASSICAL_VERTICES
    if (a, b, out) == (STAR, STAR, STAR):
        return False
    if a == PTILDE and b == PTILDE:
        return _oracle_vertex_nonzero(a, b, out)
    return _strand_triple(a, b, out) in _STRAND_TRIPLES


@lru_cache(maxsize=None)
def _oracle_vertex_nonzero(a: EdgeLabel, b: EdgeLabel, out: EdgeLabel) -> bool:
    tree = LabeledTree(out, LabeledTree(a), LabeledTree(b))
    return not expand(tree, check=False).is_zero


def channel_vertex_nonzero(a: Channel, b: Channel, out: Channel) -> bool:
    """채널 꼭짓점이 0이 아닌지 오라클로 판정"""
    if _strand_triple(a, b, out) not in _STRAND_TRIPLES:
        return False
    return _oracle_vertex_nonzero(a, b, out)


def _vertex_ok(a: EdgeLabel, b: EdgeLabel, c: EdgeLabel) -> bool:
    if all(isinstance(x, ParticleLabel) for x in (a, b, c)):
        return fusion_allowed(a, b, c, Mode.VIRTUAL)  # type: ignore[arg-type]
    return _strand_triple(a, b, c) in _STRAND_TRIPLES


def check_admissible(tree: LabeledTree, mode: Union[Mode, str] = Mode.VIRTUAL) -> None:
    mode = Mode(mode)
    for _, node in tree.vertices():
        a, b, c = node.vertex
        if mode == Mode.CLASSICAL:
            ok = all(isinstance(x, ParticleLabel) for x in (a, b, c)) and fusion_allowed(a, b, c, mode)  # type: ignore[arg-type]
        else:
            ok = _vertex_ok(a, b, c)
        if not ok:
            raise InadmissibleTree(format_tree(tree), (a, b, c), mode.value)
    if mode == Mode.CLASSICAL and any(label != P for label in tree.leaves()):
        raise InadmissibleTree(format_tree(tree), tuple(tree.leaves()), mode.value)


def is_admissible(tree: LabeledTree, mode: Union[Mode, str] = Mode.VIRTUAL) -> bool:
    try:
        check_admissible(tree, mode)
    except InadmissibleTree:
        return False
    return True


@lru_cache(maxsize=4096)
def _expand(tree: LabeledTree, skeleton_root: bool, skeleton_leaves: bool) -> DiagramSum:
    if tree.is_leaf:
        return edge_projector(tree.label, skeleton_leaves)
    a, b, c = tree.vertex
    vertex = junction(*_strand_triple(a, b, c))
    if vertex.is_zero:
        return vertex
    children = tensor(
        _expand(tree.left, False, skeleton_leaves),  # type: ignore[arg-type]
        _expand(tree.right, False, skeleton_leaves),  # type: ignore[arg-type]
    )
    return compose(edge_projector(c, skeleton_root), compose(vertex, children))


def expand(tree: LabeledTree, boundary: Boundary = "full", check: bool = True) -> DiagramSum:
    """
    라벨 트리의 다이어그램 전개.

    뿌리 케이블이 아래쪽(뿌리 가닥 수), 잎 케이블이 위쪽(잎 가닥 수 합)에 놓인다.
    """
    if boundary not in ("full", "skeleton"):
        raise ValueError(f"unknown boundary mode '{boundary}'")
    if check:
        check_admissible(tree, Mode.VIRTUAL)
    skeleton = boundary == "skeleton"
    return _expand(tree, skeleton, skeleton)


def leaf_strands(tree: LabeledTree) -> int:
    return sum(STRAND_COUNT[label] for label in tree.leaves())


def _boundary_compatible(x: LabeledTree, y: LabeledTree) -> bool:
    if x.leaf_count != y.leaf_count or x.root_strands != y.root_strands:
        return False
    if [STRAND_COUNT[l] for l in x.leaves()] != [STRAND_COUNT[l] for l in y.leaves()]:
        return False
    # 서로 다른 채널 사영자는 직교한다
    for lx, ly in zip(x.leaves() + [x.label], y.leaves() + [y.label]):
        if isinstance(lx, Channel) and isinstance(ly, Channel) and lx != ly:
            return False
    return True


def _skeleton_exact(x: LabeledTree, y: LabeledTree) -> bool:
    # 입자 사영자 Q 는 Q∘P₂ = Q 이므로 x 쪽 P₂ 생략이 항상 정확하다
    for lx, ly in zip(x.leaves() + [x.label], y.leaves() + [y.label]):
        if isinstance(lx, Channel) and lx != ly:
            return False
    return True


def pairing(x: LabeledTree, y: LabeledTree) -> Scalar:
    """⟨x, y⟩ = close(mirror(expand(x)) ∘ expand(y)); 대칭 쌍선형"""
    if not _boundary_compatible(x, y):
        return Scalar(0)
    boundary = "skeleton" if _skeleton_exact(x, y) else "full"
    return _pairing_cached(x, y, boundary)


@lru_cache(maxsize=8192)
def _pairing_cached(x: LabeledTree, y: LabeledTree, boundary: str) -> Scalar:
    return close(compose(expand(y, check=False), mirror(expand(x, boundary, check=False))))


def pairing_with_diagram(x: LabeledTree, element: DiagramSum) -> Scalar:
    """트리 x 와 임의의 다이어그램 원소 (뿌리 아래, 잎 위) 의 쌍"""
    if element.is_zero:
        return Scalar(0)
    return close(compose(element, mirror(expand(x, check=False))))


def gram_matrix(basis: Sequence[LabeledTree]) -> ScalarMatrix:
    """(i, j) 성분이 ⟨b_i, b_j⟩ 인 대칭 행렬"""
    if basis:
        first = basis[0]
        for tree in basis[1:]:
            if tree.shape != first.shape:
                raise ShapeMismatch(str(first.shape), str(tree.shape))
            if tree.root_strands != first.root_strands:
                raise ShapeMismatch(f"root with {first.root_strands} strands", f"{tree.root_strands} strands")
    size = len(basis)
    matrix: ScalarMatrix = [[Scalar(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = pairing(basis[i], basis[j])
            matrix[i][j] = value
            matrix[j][i] = value
    return matrix


def _labelings(
    shape: TreeShape,
    leaf_labels: Sequence[ParticleLabel],
    allowed,
) -> List[LabeledTree]:
    if isinstance(shape, Leaf):
        return [LabeledTree(label) for label in leaf_labels]
    lefts = _labelings(shape.left, leaf_labels, allowed)
    rights = _labelings(shape.right, leaf_labels, allowed)
    result = []
    for left in lefts:
        for right in rights:
            for out in PARTICLE_ORDER:
                if allowed(left.label, right.label, out):
                    result.append(LabeledTree(out, left, right))
    return result


def enumerate_labelings(
    shape: TreeShape,
    mode: Union[Mode, str] = Mode.CLASSICAL,
    leaf_label: ParticleLabel = P,
    root_filter: Optional[ParticleLabel] = None,
) -> List[LabeledTree]:
    """허용되는 모든 라벨링, 후위 순회 간선 기준 사전식 (P < * < P̃)"""
    mode = Mode(mode)
    trees = _labelings(shape, (leaf_label,), lambda a, b, c: fusion_allowed(a, b, c, mode))
    if root_filter is not None:
        trees = [tree for tree in trees if tree.label == root_filter]
    return trees


def count_labelings(
    leaves: int,
    mode: Union[Mode, str] = Mode.CLASSICAL,
    leaf_label: ParticleLabel = P,
) -> Dict[ParticleLabel, int]:
    """왼쪽 빗 모양의 뿌리 라벨별 라벨링 개수 (동적 계획법)"""
    mode = Mode(mode)
    counts: Dict[ParticleLabel, int] = {label: 0 for label in PARTICLE_ORDER}
    counts[leaf_label] = 1
    for _ in range(leaves - 1):
        step = {label: 0 for label in PARTICLE_ORDER}
        for a, n in counts.items():
            if not n:
                continue
            for c in PARTICLE_ORDER:
                if fusion_allowed(a, leaf_label, c, mode):
                    step[c] += n
        counts = step
    return counts


def canonicalize(tree: LabeledTree) -> LabeledTree:
    """
    장식(P̃)을 표준 위치로 옮긴다.
    cap (e1, e2 → *) 에서는 왼쪽 입력의 장식이 오른쪽 입력으로,
    통과 꼭짓점 (*, e → c) / (e, * → c) 에서는 입력의 장식이 출력으로 간다.
    """
    if tree.is_leaf:
        return tree
    left = canonicalize(tree.left)  # type: ignore[arg-type]
    right = canonicalize(tree.right)  # type: ignore[arg-type]
    out = tree.label
    a, b = left.label, right.label
    if out == STAR and a == PTILDE and STRAND_COUNT[b] == 2:
        left, right = left.relabel(P), right.relabel(toggle(b))  # type: ignore[arg-type]
    elif a == STAR and b == PTILDE and STRAND_COUNT[out] == 2:
        right, out = right.relabel(P), toggle(out)  # type: ignore[arg-type]
    elif b == STAR and a == PTILDE and STRAND_COUNT[out] == 2:
        left, out = left.relabel(P), toggle(out)  # type: ignore[arg-type]
    return LabeledTree(out, left, right)


def is_canonical(tree: LabeledTree) -> bool:
    return canonicalize(tree) == tree


def canonicalize_vector(vector: TreeVector) -> TreeVector:
    return TreeVector.accumulate((canonicalize(tree), coeff) for tree, coeff in vector.items())


_TO_CHANNELS = {
    P: ((SYM, 1), (ALT, 1)),
    PTILDE: ((SYM, 1), (ALT, -1)),
    STAR: ((VAC, 1),),
}
_HALF = Fraction(1, 2)
_FROM_CHANNELS = {
    SYM: ((P, _HALF), (PTILDE, _HALF)),
    ALT: ((P, _HALF), (PTILDE, -_HALF)),
    VAC: ((STAR, Fraction(1)),),
}


def _channel_terms(tree: LabeledTree) -> List[Tuple[LabeledTree, int]]:
    options = _TO_CHANNELS[tree.label]  # type: ignore[index]
    if tree.is_leaf:
        return [(LabeledTree(label), sign) for label, sign in options]
    result = []
    for left, s1 in _channel_terms(tree.left):  # type: ignore[arg-type]
        for right, s2 in _channel_terms(tree.right):  # type: ignore[arg-type]
            for out, s3 in options:
                if channel_vertex_nonzero(left.label, right.label, out):  # type: ignore[arg-type]
                    result.append((LabeledTree(out, left, right), s1 * s2 * s3))
    return result


def to_channels(tree: LabeledTree) -> TreeVector:
    """P = sym + alt, P̃ = sym − alt, * = vac 로 전개하고 0 꼭짓점을 버린다"""
    if isinstance(tree, TreeVector):
        return vector_to_channels(tree)
    return TreeVector.accumulate((t, Scalar(s)) for t, s in _channel_terms(tree))


def vector_to_channels(vector: TreeVector) -> TreeVector:
    pieces = []
    for tree, coeff in vector.items():
        pieces.extend((t, coeff * s) for t, s in _channel_terms(tree))
    return TreeVector.accumulate(pieces)


def _particle_terms(tree: LabeledTree) -> List[Tuple[LabeledTree, Fraction]]:
    options = _FROM_CHANNELS[tree.label]  # type: ignore[index]
    if tree.is_leaf:
        return [(LabeledTree(label), w) for label, w in options]
    result = []
    for left, w1 in _particle_terms(tree.left):  # type: ignore[arg-type]
        for right, w2 in _particle_terms(tree.right):  # type: ignore[arg-type]
            for out, w3 in options:
                result.append((canonicalize(LabeledTree(out, left, right)), w1 * w2 * w3))
    return result


def _fraction_scalar(value: Fraction) -> Scalar:
    return Scalar(RationalFn(value.numerator, value.denominator))


def from_channels(tree: LabeledTree) -> TreeVector:
    """sym = (P + P̃)/2, alt = (P − P̃)/2, vac = * 로 되돌리고 표준형으로 모은다"""
    totals: Dict[LabeledTree, Fraction] = {}
    for t, w in _particle_terms(tree):
        totals[t] = totals.get(t, Fraction(0)) + w
    return TreeVector({t: _fraction_scalar(w) for t, w in totals.items() if w})


def vector_from_channels(vector: TreeVector) -> TreeVector:
    pieces = []
    for tree, coeff in vector.items():
        pieces.extend((t, coeff * c) for t, c in from_channels(tree).items())
    return TreeVector.accumulate(pieces)


def _sector_roots(root: Union[ParticleLabel, Channel, str]) -> Tuple[EdgeLabel, ...]:
    label = ParticleLabel(root) if not isinstance(root, (ParticleLabel, Channel)) else root
    return (P, PTILDE) if STRAND_COUNT[label] == 2 else (STAR,)


def decorated_basis(leaves: int, root: Union[ParticleLabel, str] = P) -> List[LabeledTree]:
    """
    뿌리 섹터(2가닥이면 P/P̃, 0가닥이면 *)의 표준 장식 왼쪽 빗 기저.
    잎은 P 또는 P̃ 이다.
    """
    roots = _sector_roots(root)
    trees = _labelings(
        left_comb(leaves),
        (P, PTILDE),
        lambda a, b, c: fusion_allowed(a, b, c, Mode.VIRTUAL),
    )
    return [tree for tree in trees if tree.label in roots and is_canonical(tree)]


def channel_basis(leaves: int, root: Union[ParticleLabel, Channel, str] = P) -> List[LabeledTree]:
    """0이 아닌 꼭짓점만 가진 채널 왼쪽 빗 (잎은 sym/alt)"""
    wanted = (SYM, ALT) if STRAND_COUNT[_sector_roots(root)[0]] == 2 else (VAC,)

    def build(shape: TreeShape) -> List[LabeledTree]:
        if isinstance(shape, Leaf):
            return [LabeledTree(SYM), LabeledTree(ALT)]
        result = []
        for left in build(shape.left):
            for right in build(shape.right):
                for out in (SYM, ALT, VAC):
                    if channel_vertex_nonzero(left.label, right.label, out):  # type: ignore[arg-type]
                        result.append(LabeledTree(out, left, right))
        return result

    return [tree for tree in build(left_comb(leaves)) if tree.label in wanted]


class TreeService:
    """융합 트리 서비스"""

    def __init__(self) -> None:
        self.io_logger = ModuleIOLogger("TreeService")

    def fusion_allowed(self, a: ParticleLabel, b: ParticleLabel, out: ParticleLabel, mode: Union[Mode, str]) -> bool:
        return fusion_allowed(a, b, out, mode)

    def expand_to_diagram(self, tree: LabeledTree, boundary: Boundary = "full") -> DiagramSum:
        self.io_logger.log_input("expand_to_diagram", tree=format_tree(tree))
        start = time.time()
        try:
            result = expand(tree, boundary)
        except InadmissibleTree as exc:
            self.io_logger.log_error("expand_to_diagram", exc, time.time() - start)
            raise
        self.io_logger.log_output("expand_to_diagram", result, time.time() - start)
        return result

    def gram_matrix(self, basis: Sequence[LabeledTree]) -> ScalarMatrix:
        self.io_logger.log_input("gram_matrix", size=len(basis))
        start = time.time()
        try:
            result = gram_matrix(basis)
        except ShapeMismatch as exc:
            self.io_logger.log_error("gram_matrix", exc, time.time() - start)
            raise
        self.io_logger.log_output("gram_matrix", execution_time=time.time() - start)
        return result

    def enumerate_labelings(
        self,
        shape: TreeShape,
        mode: Union[Mode, str] = Mode.CLASSICAL,
        leaf_label: ParticleLabel = P,
        root_filter: Optional[ParticleLabel] = None,
    ) -> List[LabeledTree]:
        self.io_logger.log_input("enumerate_labelings", shape=str(shape), mode=str(mode))
        result = enumerate_labelings(shape, mode, leaf_label, root_filter)
        logger.debug("enumerated %d labelings of %s", len(result), shape)
        return result
