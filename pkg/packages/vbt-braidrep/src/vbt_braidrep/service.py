"""
가상 땋임 표현 서비스

땋임 단어의 왼쪽 빗 공간 작용 행렬, 피보나치 모형 행렬, VB_n 관계 검사,
닫힘의 괄호 다항식과 무작위 단어 생성을 제공합니다.
"""

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from vbt_diagrams import braid_diagram, close
from vbt_recoupling import Direction, apply_word, f_move, r_move
from vbt_scalars import FIBONACCI_A, Scalar, constants, identity_matrix
from vbt_scalars.utils import ModuleIOLogger
from vbt_trees import (
    STRAND_COUNT,
    LabeledTree,
    Mode,
    ParticleLabel,
    TreeVector,
    channel_basis,
    decorated_basis,
    enumerate_labelings,
    format_tree,
    left_comb,
    pairing,
)

from .exceptions import BasisDeficiency, StrandMismatch
from .grammar import parse_braid
from .models import BracketResult, BraidWord, RelationReport, RelationResult, RepMatrix, format_braid

logger = logging.getLogger(__name__)

P, STAR, PTILDE = ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE

RootInput = Union[ParticleLabel, str]


def _root_label(root: RootInput) -> ParticleLabel:
    label = root if isinstance(root, ParticleLabel) else ParticleLabel(root)
    # P 와 P̃ 는 같은 섹터
    return P if STRAND_COUNT[label] == 2 else STAR


def random_word(
    strands: int,
    length: int,
    seed: Optional[int] = 0,
    kinds: Sequence[str] = ("s", "v"),
    rng: Optional[random.Random] = None,
) -> BraidWord:
    """seed 가 같으면 같은 단어 (정규화하지 않음)"""
    if strands < 2:
        return BraidWord.identity(strands)
    rng = rng or random.Random(seed)
    letters = []
    for _ in range(length):
        kind = rng.choice(list(kinds))
        index = rng.randint(1, strands - 1)
        power = 1 if kind == "v" else rng.choice((1, -1))
        letters.append((kind, index, power))
    return BraidWord(strands, tuple(letters))


@lru_cache(maxsize=None)
def sector_basis(leaves: int, root: ParticleLabel = P) -> Tuple[LabeledTree, ...]:
    """
    뿌리 섹터의 표준 장식 왼쪽 빗 기저.
    채널 기저의 노름이 모두 0 이 아니어야 독립이다.
    """
    root = _root_label(root)
    basis = decorated_basis(leaves, root)
    channels = channel_basis(leaves, root)
    if len(channels) != len(basis):
        raise BasisDeficiency(leaves, root.value, f"{len(basis)} decorated trees for {len(channels)} channel trees")
    for tree in channels:
        if not pairing(tree, tree):
            raise BasisDeficiency(leaves, root.value, "zero norm in the channel basis", format_tree(tree))
    logger.debug("basis for %d leaves, root %s has %d trees", leaves, root.value, len(basis))
    return tuple(basis)


def _coordinates(
    vector: TreeVector,
    index: Dict[LabeledTree, int],
    size: int,
    leaves: int,
    root: ParticleLabel,
) -> List[Scalar]:
    column = [Scalar(0)] * size
    for tree, coeff in vector.items():
        if tree not in index:
            raise BasisDeficiency(leaves, root.value, "image leaves the span of the basis", format_tree(tree))
        column[index[tree]] = coeff
    return column


def _assemble(
    word: BraidWord,
    root: ParticleLabel,
    basis: Sequence[LabeledTree],
    images: Sequence[TreeVector],
    notes: Set[str],
) -> RepMatrix:
    index = {tree: i for i, tree in enumerate(basis)}
    columns = [_coordinates(image, index, len(basis), word.strands, root) for image in images]
    entries = [[columns[j][i] for j in range(len(basis))] for i in range(len(basis))]
    return RepMatrix(word=word, root=root.value, basis=list(basis), entries=entries, uncertified=sorted(notes))


def _check_leaves(word: BraidWord, leaves: Optional[int]) -> int:
    if leaves is not None and leaves != word.strands:
        raise StrandMismatch(word.strands, leaves, "rep_matrix")
    return word.strands


def rep_matrix(
    word: BraidWord,
    leaves: Optional[int] = None,
    root: RootInput = P,
    max_workers: int = 1,
) -> RepMatrix:
    """
    왼쪽 빗 기저 위에 단어를 얹고 왼쪽 결합한 작용의 행렬.
    rep(w₁w₂) = rep(w₁)·rep(w₂).
    """
    leaves = _check_leaves(word, leaves)
    label = _root_label(root)
    basis = sector_basis(leaves, label)
    notes: Set[str] = set()

    def image(tree: LabeledTree) -> TreeVector:
        local: Set[str] = set()
        result = apply_word(TreeVector.of(tree), word.letters, local)
        notes.update(local)
        return result

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            images = list(executor.map(image, basis))
    else:
        images = [image(tree) for tree in basis]
    if notes:
        logger.info("rep matrix of %s used %d uncertified rule(s)", format_braid(word), len(notes))
    return _assemble(word, label, basis, images, notes)


def classical_basis(leaves: int, root: RootInput = P) -> List[LabeledTree]:
    """P 잎과 P, * 내부 간선을 가진 고전 왼쪽 빗"""
    return enumerate_labelings(left_comb(leaves), Mode.CLASSICAL, P, _root_label(root))


def _classical_letter(vector: TreeVector, index: int, sign: int, leaves: int) -> TreeVector:
    if index == 1:
        return r_move(vector, "L" * (leaves - 2), sign)
    locator = "L" * (leaves - index - 1)
    vector = f_move(vector, locator, Direction.BACKWARD)
    vector = r_move(vector, locator + "R", sign)
    return f_move(vector, locator, Direction.FORWARD)


def classical_rep_matrix(word: BraidWord, leaves: Optional[int] = None, root: RootInput = P) -> RepMatrix:
    """
    피보나치 모형: 유니터리 F 와 R 로 만든 고전 왼쪽 빗 기저 위의 작용.
    F² = ((Δ+1)/Δ²)·I 이므로 A = exp(3πi/5) 에서만 표현이 된다.
    """
    if not word.is_classical:
        raise ValueError("the Fibonacci model acts by classical generators only")
    leaves = _check_leaves(word, leaves)
    label = _root_label(root)
    basis = classical_basis(leaves, label)
    images = []
    for tree in basis:
        vector = TreeVector.of(tree)
        for _, index, power in reversed(word.letters):
            vector = _classical_letter(vector, index, power, leaves)
        images.append(vector)
    return _assemble(word, label, basis, images, set())


def unitarity_residual(matrix: RepMatrix, value: complex = FIBONACCI_A) -> float:
    """‖M*M − I‖ (A = value)"""
    numeric = matrix.evaluate(value)
    return float(np.linalg.norm(numeric.conj().T @ numeric - np.eye(matrix.size)))


def relation_instances(strands: int) -> List[Tuple[str, BraidWord, BraidWord]]:
    """VB_n 의 정의 관계 (lhs, rhs 는 정규화하지 않은 단어)"""

    def word(*letters) -> BraidWord:
        return BraidWord(strands, tuple(letters))

    def s(i: int, p: int = 1):
        return ("s", i, p)

    def v(i: int):
        return ("v", i, 1)

    pairs: List[Tuple[BraidWord, BraidWord]] = []
    identity = word()
    for i in range(1, strands):
        pairs.append((word(s(i), s(i, -1)), identity))
        pairs.append((word(v(i), v(i)), identity))
    for i in range(1, strands - 1):
        pairs.append((word(s(i), s(i + 1), s(i)), word(s(i + 1), s(i), s(i + 1))))
        pairs.append((word(v(i), v(i + 1), v(i)), word(v(i + 1), v(i), v(i + 1))))
        pairs.append((word(v(i + 1), v(i), s(i + 1)), word(s(i), v(i + 1), v(i))))
    for i in range(1, strands):
        for j in range(i + 2, strands):
            pairs.append((word(s(i), s(j)), word(s(j), s(i))))
            pairs.append((word(v(i), v(j)), word(v(j), v(i))))
            pairs.append((word(s(i), v(j)), word(v(j), s(i))))
            pairs.append((word(v(i), s(j)), word(s(j), v(i))))
    return [(f"{_body(lhs)} = {_body(rhs)}", lhs, rhs) for lhs, rhs in pairs]


def _body(word: BraidWord) -> str:
    text = format_braid(word).split(";", 1)[1].strip()
    return text or "e"


def _sectors(strands: int) -> List[ParticleLabel]:
    return [P, STAR] if strands >= 2 else [P]


def check_relations(strands: int, max_workers: int = 1) -> RelationReport:
    """
    관계마다 오라클 판정(단일 가닥 다이어그램 상의 일치)과
    뿌리 섹터별 작용 행렬 판정을 함께 보고한다. 실패는 보고서 내용이다.
    """
    if not 2 <= strands <= 5:
        raise ValueError(f"relation checks run on 2..5 strands, got {strands}")
    cache: Dict[Tuple[Tuple, ParticleLabel], RepMatrix] = {}
    notes: Set[str] = set()

    def rep(word: BraidWord, root: ParticleLabel) -> RepMatrix:
        key = (word.letters, root)
        if key not in cache:
            cache[key] = rep_matrix(word, strands, root, max_workers)
            notes.update(cache[key].uncertified)
        return cache[key]

    results = []
    for name, lhs, rhs in relation_instances(strands):
        oracle = braid_diagram(lhs.letters, strands) == braid_diagram(rhs.letters, strands)
        sectors: Dict[str, bool] = {}
        witness: Optional[str] = None
        for root in _sectors(strands):
            left, right = rep(lhs, root), rep(rhs, root)
            same = left.entries == right.entries
            sectors[root.value] = same
            if not same and witness is None:
                j = next(j for j in range(left.size) if left.column(j) != right.column(j))
                witness = f"{root.value}: {format_tree(left.basis[j])}"
        passed = oracle and all(sectors.values())
        if not passed:
            logger.warning("relation %s fails on %d strands (oracle=%s)", name, strands, oracle)
        results.append(
            RelationResult(
                name=name,
                lhs=format_braid(lhs),
                rhs=format_braid(rhs),
                oracle=oracle,
                sectors=sectors,
                witness=witness,
                passed=passed,
            )
        )
    return RelationReport(strands=strands, results=results, uncertified=sorted(notes))


def bracket_closure(word: BraidWord, normalize: bool = False) -> BracketResult:
    """
    고전 교차는 스케인 관계로, 가상 교차는 자리바꿈으로 펼친 뒤 닫는다.
    normalize 이면 d 로 나눈다.
    """
    value = close(braid_diagram(word.letters, word.strands))
    if normalize:
        value = value / constants().d
    return BracketResult(
        word=format_braid(word),
        value=value,
        writhe=word.writhe,
        strands=word.strands,
        normalized=normalize,
    )


def is_identity(matrix: RepMatrix) -> bool:
    return matrix.entries == identity_matrix(matrix.size)


class BraidRepService:
    """가상 땋임 표현 서비스"""

    def __init__(self, max_workers: int = 1) -> None:
        self.max_workers = max_workers
        self.io_logger = ModuleIOLogger("BraidRepService")

    def parse_braid(self, text: str) -> BraidWord:
        self.io_logger.log_input("parse_braid", text=text)
        return parse_braid(text)

    def rep_matrix(self, word: BraidWord, leaves: Optional[int] = None, root: RootInput = P) -> RepMatrix:
        self.io_logger.log_input("rep_matrix", word=format_braid(word), root=str(root))
        start = time.time()
        try:
            result = rep_matrix(word, leaves, root, self.max_workers)
        except (BasisDeficiency, StrandMismatch) as exc:
            self.io_logger.log_error("rep_matrix", exc, time.time() - start)
            raise
        self.io_logger.log_output("rep_matrix", result, time.time() - start)
        return result

    def classical_rep_matrix(self, word: BraidWord, leaves: Optional[int] = None, root: RootInput = P) -> RepMatrix:
        return classical_rep_matrix(word, leaves, root)

    def check_relations(self, strands: int) -> RelationReport:
        self.io_logger.log_input("check_relations", strands=strands)
        start = time.time()
        report = check_relations(strands, self.max_workers)
        logger.info("%d of %d relations pass on %d strands",
                    len(report.results) - len(report.failures()), len(report.results), strands)
        self.io_logger.log_output("check_relations", report, time.time() - start)
        return report

    def bracket_closure(self, word: BraidWord, normalize: bool = False) -> BracketResult:
        return bracket_closure(word, normalize)

    def random_word(self, strands: int, length: int, seed: Optional[int] = 0) -> BraidWord:
        return random_word(strands, length, seed)
