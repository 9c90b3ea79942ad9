"""
트리 텍스트 문법

    tree  := atom [":" label]
    atom  := "L" | "(" tree tree ")"
    label := "P" | "*" | "~P" | "sym" | "alt" | "vac"

라벨이 하나도 없으면 모양(TreeShape), 모든 간선에 있으면 LabeledTree 이다.
"""

from typing import List, Optional, Tuple, Union

from .exceptions import TreeSyntaxError
from .models import EdgeLabel, LabeledTree, Leaf, Node, TreeShape, label_from_text, label_tree

GRAMMAR_HINT = "tree := 'L' | '(' tree tree ')' with optional ':P' | ':*' | ':~P' after every subterm"

# (모양, [(라벨, 위치)]) 를 후위 순회로 모은 중간 표현
_Parsed = Tuple[TreeShape, List[Tuple[Optional[EdgeLabel], int]]]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, reason: str, position: Optional[int] = None) -> TreeSyntaxError:
        return TreeSyntaxError(self.text, self.pos if position is None else position, reason)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def tree(self) -> _Parsed:
        char = self.peek()
        if char == "L":
            self.pos += 1
            shape: TreeShape = Leaf()
            labels: List[Tuple[Optional[EdgeLabel], int]] = []
        elif char == "(":
            self.pos += 1
            left, left_labels = self.tree()
            right, right_labels = self.tree()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            shape = Node(left, right)
            labels = left_labels + right_labels
        elif not char:
            raise self.error("unexpected end of input")
        else:
            raise self.error(f"unexpected character '{char}'")
        labels.append(self.label())
        return shape, labels

    def label(self) -> Tuple[Optional[EdgeLabel], int]:
        if self.peek() != ":":
            return None, self.pos
        self.pos += 1
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace() and self.text[self.pos] not in "()":
            self.pos += 1
        word = self.text[start:self.pos]
        label = label_from_text(word)
        if label is None:
            raise self.error(f"unknown label '{word}'", start)
        return label, start


def _parse(text: str) -> _Parsed:
    parser = _Parser(text)
    parsed = parser.tree()
    if parser.peek():
        raise parser.error("trailing input")
    return parsed


def parse_tree_or_shape(text: str) -> Union[LabeledTree, TreeShape]:
    shape, labels = _parse(text)
    present = [label for label, _ in labels if label is not None]
    if not present:
        return shape
    if len(present) != len(labels):
        missing = next(pos for label, pos in labels if label is None)
        raise TreeSyntaxError(text, missing, "every edge needs a label once any edge has one")
    return label_tree(shape, present)


def parse_tree(text: str) -> LabeledTree:
    result = parse_tree_or_shape(text)
    if not isinstance(result, LabeledTree):
        raise TreeSyntaxError(text, 0, "expected a labeled tree")
    return result


def parse_shape(text: str) -> TreeShape:
    result = parse_tree_or_shape(text)
    if isinstance(result, LabeledTree):
        raise TreeSyntaxError(text, 0, "expected an unlabeled shape")
    return result


def format_shape(shape: TreeShape) -> str:
    return str(shape)
