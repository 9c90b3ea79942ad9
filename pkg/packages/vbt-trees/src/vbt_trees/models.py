"""
융합 트리 데이터 모델

트리 모양(Leaf/Node), 간선 라벨(입자 라벨 P, *, P̃ 와 채널 라벨 sym, alt, vac),
라벨 트리(LabeledTree)와 그 Scalar 선형결합(TreeVector)을 정의합니다.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from vbt_scalars import Scalar, as_scalar

from .exceptions import BadLocator


class ParticleLabel(str, Enum):
    """입자 라벨 (열거 순서 P < * < P̃)"""

    P = "P"
    STAR = "*"
    PTILDE = "~P"


class Channel(str, Enum):
    """2가닥 간선의 대칭/반대칭 분해 채널과 빈 간선"""

    SYM = "sym"
    ALT = "alt"
    VAC = "vac"


class Mode(str, Enum):
    """융합 규칙 집합"""

    CLASSICAL = "classical"
    VIRTUAL = "virtual"


EdgeLabel = Union[ParticleLabel, Channel]

PARTICLE_ORDER: Tuple[ParticleLabel, ...] = (ParticleLabel.P, ParticleLabel.STAR, ParticleLabel.PTILDE)

STRAND_COUNT: Dict[EdgeLabel, int] = {
    ParticleLabel.P: 2,
    ParticleLabel.PTILDE: 2,
    ParticleLabel.STAR: 0,
    Channel.SYM: 2,
    Channel.ALT: 2,
    Channel.VAC: 0,
}

_LABELS_BY_TEXT: Dict[str, EdgeLabel] = {
    **{label.value: label for label in ParticleLabel},
    **{label.value: label for label in Channel},
}


def label_from_text(text: str) -> Optional[EdgeLabel]:
    return _LABELS_BY_TEXT.get(text)


def strands(label: EdgeLabel) -> int:
    return STRAND_COUNT[label]


@dataclass(frozen=True)
class Leaf:
    """트리 모양의 잎"""

    @property
    def leaf_count(self) -> int:
        return 1

    def __str__(self) -> str:
        return "L"


@dataclass(frozen=True)
class Node:
    """트리 모양의 내부 꼭짓점"""

    left: "TreeShape"
    right: "TreeShape"

    @property
    def leaf_count(self) -> int:
        return self.left.leaf_count + self.right.leaf_count

    def __str__(self) -> str:
        return f"({self.left} {self.right})"


TreeShape = Union[Leaf, Node]


def left_comb(leaves: int) -> TreeShape:
    """((..(L L) L)..) L) 모양"""
    if leaves < 1:
        raise ValueError("a tree needs at least one leaf")
    shape: TreeShape = Leaf()
    for _ in range(leaves - 1):
        shape = Node(shape, Leaf())
    return shape


def is_left_comb(shape: TreeShape) -> bool:
    while isinstance(shape, Node):
        if not isinstance(shape.right, Leaf):
            return False
        shape = shape.left
    return True


@dataclass(frozen=True)
class LabeledTree:
    """
    간선마다 라벨이 붙은 이진 융합 트리.

    label 은 이 부분트리의 뿌리 쪽으로 나가는 간선의 라벨이다.
    잎은 left, right 가 모두 None 이다.
    """

    label: EdgeLabel
    left: Optional["LabeledTree"] = None
    right: Optional["LabeledTree"] = None

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise ValueError("a vertex needs exactly two children")

    @classmethod
    def leaf(cls, label: EdgeLabel = ParticleLabel.P) -> "LabeledTree":
        return cls(label)

    @classmethod
    def node(cls, left: "LabeledTree", right: "LabeledTree", label: EdgeLabel) -> "LabeledTree":
        return cls(label, left, right)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def shape(self) -> TreeShape:
        if self.is_leaf:
            return Leaf()
        return Node(self.left.shape, self.right.shape)  # type: ignore[union-attr]

    @property
    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.leaf_count + self.right.leaf_count  # type: ignore[union-attr]

    @property
    def root_strands(self) -> int:
        return STRAND_COUNT[self.label]

    @property
    def vertex(self) -> Tuple[EdgeLabel, EdgeLabel, EdgeLabel]:
        """(왼쪽 입력, 오른쪽 입력, 출력)"""
        if self.is_leaf:
            raise ValueError("a leaf has no vertex")
        return (self.left.label, self.right.label, self.label)  # type: ignore[union-attr]

    def leaves(self) -> List[EdgeLabel]:
        if self.is_leaf:
            return [self.label]
        return self.left.leaves() + self.right.leaves()  # type: ignore[union-attr]

    def edges(self) -> List[EdgeLabel]:
        """후위 순회 순서의 간선 라벨"""
        if self.is_leaf:
            return [self.label]
        return self.left.edges() + self.right.edges() + [self.label]  # type: ignore[union-attr]

    def vertices(self, prefix: str = "") -> Iterator[Tuple[str, "LabeledTree"]]:
        """(위치 문자열, 부분트리) 를 후위 순회로"""
        if self.is_leaf:
            return
        yield from self.left.vertices(prefix + "L")  # type: ignore[union-attr]
        yield from self.right.vertices(prefix + "R")  # type: ignore[union-attr]
        yield prefix, self

    def relabel(self, label: EdgeLabel) -> "LabeledTree":
        return LabeledTree(label, self.left, self.right)

    def is_channel_tree(self) -> bool:
        return all(isinstance(label, Channel) for label in self.edges())

    def is_particle_tree(self) -> bool:
        return all(isinstance(label, ParticleLabel) for label in self.edges())

    def subtree(self, locator: str) -> "LabeledTree":
        node = self
        for step in locator:
            if node.is_leaf or step not in "LR":
                raise BadLocator(locator, format_tree(self))
            node = node.left if step == "L" else node.right  # type: ignore[assignment]
        return node

    def replace(self, locator: str, new: "LabeledTree") -> "LabeledTree":
        if not locator:
            return new
        if self.is_leaf or locator[0] not in "LR":
            raise BadLocator(locator, format_tree(self))
        if locator[0] == "L":
            return LabeledTree(self.label, self.left.replace(locator[1:], new), self.right)  # type: ignore[union-attr]
        return LabeledTree(self.label, self.left, self.right.replace(locator[1:], new))  # type: ignore[union-attr]

    def __str__(self) -> str:
        return format_tree(self)

    def __repr__(self) -> str:
        return f"LabeledTree({format_tree(self)})"


def format_tree(tree: LabeledTree) -> str:
    """`((L:P L:P):* L:P):P` 형식"""
    label = tree.label.value
    if tree.is_leaf:
        return f"L:{label}"
    return f"({format_tree(tree.left)} {format_tree(tree.right)}):{label}"  # type: ignore[arg-type]


def tree_sort_key(tree: LabeledTree) -> Tuple[int, str]:
    return (tree.leaf_count, format_tree(tree))


def label_tree(shape: TreeShape, edges: Iterable[EdgeLabel]) -> LabeledTree:
    """후위 순회 간선 라벨로 모양에 라벨을 붙인다"""
    stream = iter(edges)

    def build(node: TreeShape) -> LabeledTree:
        if isinstance(node, Leaf):
            return LabeledTree(next(stream))
        left = build(node.left)
        right = build(node.right)
        return LabeledTree(next(stream), left, right)

    tree = build(shape)
    if next(stream, None) is not None:
        raise ValueError("too many edge labels for shape")
    return tree


Coefficient = Union[Scalar, int]


class TreeVector:
    """LabeledTree 를 기저로 하는 형식적 선형결합 (0 계수 없음)"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[LabeledTree, Coefficient]] = None):
        cleaned: Dict[LabeledTree, Scalar] = {}
        for tree, coeff in (terms or {}).items():
            value = as_scalar(coeff)
            if value:
                cleaned[tree] = value
        self._terms = cleaned

    @classmethod
    def of(cls, tree: LabeledTree, coeff: Coefficient = 1) -> "TreeVector":
        return cls({tree: coeff})

    @classmethod
    def accumulate(cls, pieces: Iterable[Tuple[LabeledTree, Scalar]]) -> "TreeVector":
        acc: Dict[LabeledTree, Scalar] = {}
        for tree, coeff in pieces:
            acc[tree] = acc[tree] + coeff if tree in acc else as_scalar(coeff)
        return cls(acc)

    @property
    def terms(self) -> Dict[LabeledTree, Scalar]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[Tuple[LabeledTree, Scalar]]:
        return iter(self._terms.items())

    def sorted_items(self) -> List[Tuple[LabeledTree, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: tree_sort_key(item[0]))

    def coefficient(self, tree: LabeledTree) -> Scalar:
        return self._terms.get(tree, Scalar(0))

    def shapes(self) -> set:
        return {tree.shape for tree in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[LabeledTree]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LabeledTree):
            other = TreeVector.of(other)
        if not isinstance(other, TreeVector):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "TreeVector") -> "TreeVector":
        return TreeVector.accumulate(list(self.items()) + list(other.items()))

    def __neg__(self) -> "TreeVector":
        return TreeVector({t: -c for t, c in self.items()})

    def __sub__(self, other: "TreeVector") -> "TreeVector":
        return self + (-other)

    def scale(self, coeff: Coefficient) -> "TreeVector":
        factor = as_scalar(coeff)
        if not factor:
            return TreeVector()
        return TreeVector({t: c * factor for t, c in self.items()})

    def __rmul__(self, coeff: Coefficient) -> "TreeVector":
        return self.scale(coeff)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff}) {tree}" for tree, coeff in self.sorted_items())

    def __repr__(self) -> str:
        return f"TreeVector({self.to_text()})"
