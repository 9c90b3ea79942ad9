"""
가상 땋임 데이터 모델

BraidWord(정규화된 가상 땋임 단어), RepMatrix(뿌리 섹터별 작용 행렬)와
관계 검사/닫힘 괄호 보고서 모델을 정의합니다.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from vbt_diagrams import Letter
from vbt_scalars import Scalar, evaluate_matrix
from vbt_scalars.matrix import ScalarMatrix
from vbt_trees import LabeledTree, format_tree

from .exceptions import IndexOutOfRange, StrandMismatch


def format_letter(letter: Letter) -> str:
    kind, index, power = letter
    if kind == "v":
        return f"v{index}"
    return f"s{index}" if power > 0 else f"s{index}^-1"


def _cancels(a: Letter, b: Letter) -> bool:
    if a[0] != b[0] or a[1] != b[1]:
        return False
    return a[0] == "v" or a[2] == -b[2]


@dataclass(frozen=True)
class BraidWord:
    """
    n 가닥 가상 땋임 단어.

    글자는 (종류, 인덱스, 지수) 이며 종류 "s" 는 σ (지수 ±1), "v" 는 가상 생성원 (지수 1).
    첫 글자가 맨 위에 놓인다.
    """

    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple((k, int(i), int(p)) for k, i, p in self.letters))
        for letter in self.letters:
            kind, index, power = letter
            if kind not in ("s", "v"):
                raise ValueError(f"unknown generator '{kind}'")
            if kind == "s" and power not in (1, -1):
                raise ValueError(f"classical generators take power +1 or -1, got {power}")
            if kind == "v" and power != 1:
                raise ValueError(f"virtual generators take power 1, got {power}")
            if not 1 <= index < self.strands:
                raise IndexOutOfRange(format_letter(letter), self.strands)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def normalized(self) -> "BraidWord":
        """인접한 σᵢσᵢ⁻¹ 와 vᵢvᵢ 를 없앤다"""
        stack: List[Letter] = []
        for letter in self.letters:
            if stack and _cancels(stack[-1], letter):
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.strands, tuple(stack))

    def inverse(self) -> "BraidWord":
        inverted = tuple((k, i, p if k == "v" else -p) for k, i, p in reversed(self.letters))
        return BraidWord(self.strands, inverted)

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise StrandMismatch(self.strands, other.strands, "concat")
        return BraidWord(self.strands, self.letters + other.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return self.concat(other)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def writhe(self) -> int:
        """고전 교차 부호의 합"""
        return sum(p for k, _, p in self.letters if k == "s")

    @property
    def is_classical(self) -> bool:
        return all(k == "s" for k, _, _ in self.letters)

    def __str__(self) -> str:
        return format_braid(self)


def format_braid(word: BraidWord) -> str:
    """`n=3; s1 s2^-1 v1` 형식"""
    body = " ".join(format_letter(letter) for letter in word.letters)
    return f"n={word.strands};" + (f" {body}" if body else "")


@dataclass
class RepMatrix:
    """
    뿌리 섹터 하나에서의 작용 행렬.
    j 번째 열은 basis[j] 위에 단어를 얹고 왼쪽 결합한 결과의 좌표이다.
    """

    word: BraidWord
    root: str
    basis: List[LabeledTree]
    entries: ScalarMatrix
    uncertified: List[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.basis)

    def column(self, j: int) -> List[Scalar]:
        return [row[j] for row in self.entries]

    def evaluate(self, value: complex) -> np.ndarray:
        return evaluate_matrix(self.entries, value)

    def to_dict(self) -> Dict[str, Any]:
        """기저를 먼저, 그 다음 행 우선 Scalar 직렬화"""
        return {
            "word": format_braid(self.word),
            "root": self.root,
            "basis": [format_tree(tree) for tree in self.basis],
            "entries": [[entry.to_dict() for entry in row] for row in self.entries],
            "uncertified": list(self.uncertified),
        }


class RelationResult(BaseModel):
    """관계 하나의 검사 결과"""

    name: str = Field(..., description="관계 (lhs = rhs)")
    lhs: str = Field(..., description="왼쪽 단어")
    rhs: str = Field(..., description="오른쪽 단어")
    oracle: bool = Field(..., description="단일 가닥 다이어그램 상이 같은지")
    sectors: Dict[str, bool] = Field(default_factory=dict, description="뿌리 섹터별 작용 행렬 일치 여부")
    witness: Optional[str] = Field(None, description="처음 어긋난 열의 기저 트리")
    passed: bool = Field(..., description="모든 판정이 통과했는지")


class RelationReport(BaseModel):
    """VB_n 정의 관계 검사 보고서"""

    strands: int = Field(..., description="가닥 수")
    results: List[RelationResult] = Field(default_factory=list)
    uncertified: List[str] = Field(default_factory=list, description="사용한 규칙 중 인증되지 않은 것")

    @property
    def all_passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[RelationResult]:
        return [result for result in self.results if not result.passed]


class BracketResult(BaseModel):
    """땋임 닫힘의 괄호 다항식"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    word: str = Field(..., description="땋임 단어")
    value: Scalar = Field(..., description="괄호 값")
    writhe: int = Field(..., description="고전 교차 부호의 합")
    strands: int = Field(..., description="가닥 수")
    normalized: bool = Field(False, description="d 로 나누었는지")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "word": self.word,
            "value": self.value.to_dict(),
            "text": str(self.value),
            "writhe": self.writhe,
            "strands": self.strands,
            "normalized": self.normalized,
        }

