"""
재결합 계산 데이터 모델

국소 규칙(LocalRule), 규칙 레지스트리 항목(RewriteRule), 가상 땋임 트리 입력,
왼쪽 결합 결과와 인증서/보고서(pydantic) 모델을 정의합니다.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from vbt_diagrams import Letter
from vbt_scalars import Scalar
from vbt_trees import LabeledTree, TreeVector, format_tree


class Provenance(str, Enum):
    """규칙 계수의 출처"""

    STATED = "closed-form"
    DERIVED = "oracle-derived"


class Direction(str, Enum):
    """F 변환 방향: forward 는 (X (Y Z)) → ((X Y) Z)"""

    FORWARD = "forward"
    BACKWARD = "backward"


class FConvention(str, Enum):
    UNITARY = "unitary"
    DIAGRAMMATIC = "diagrammatic"


@dataclass(frozen=True)
class LocalRule:
    """
    오라클에서 유도한 국소 규칙 하나.

    lhs 조각을 채널 기저 조각들의 선형결합으로 쓴 것이며, certified 는
    lhs 다이어그램과 rhs 전개가 정확히 같은지 여부이다.
    """

    family: str
    key: str
    terms: Tuple[Tuple[LabeledTree, Scalar], ...]
    certified: bool
    lhs_terms: int = 0
    rhs_terms: int = 0
    residual_terms: int = 0

    def coefficient_map(self) -> Dict[str, str]:
        return {format_tree(tree): str(coeff) for tree, coeff in self.terms}


@dataclass(frozen=True)
class RewriteRule:
    """레지스트리 항목: 이름, 출처와 인증 함수"""

    family: str
    instance: str
    provenance: Provenance
    synthesize: Callable[[], LocalRule]


@dataclass(frozen=True)
class VirtualBraidedTree:
    """
    가상 땋임 단어 아래에 붙은 라벨 트리 (잎 개수 = 가닥 수).

    단어의 첫 글자가 맨 위, 트리의 뿌리가 맨 아래에 놓인다.
    """

    letters: Tuple[Letter, ...]
    tree: LabeledTree

    def __post_init__(self) -> None:
        strands = self.tree.leaf_count
        for kind, index, _ in self.letters:
            if kind not in ("s", "v"):
                raise ValueError(f"unknown letter kind '{kind}'")
            if not 1 <= index < strands:
                raise ValueError(f"letter index {index} out of range for {strands} strands")

    @classmethod
    def from_word(cls, word: object, tree: LabeledTree) -> "VirtualBraidedTree":
        """`letters` 와 `strands` 를 가진 단어 객체 (BraidWord) 로부터"""
        strands = getattr(word, "strands", tree.leaf_count)
        if strands != tree.leaf_count:
            raise ValueError(f"braid on {strands} strands cannot act on {tree.leaf_count} leaves")
        letters = tuple((l[0], int(l[1]), int(l[2])) for l in getattr(word, "letters"))
        return cls(letters, tree)

    @property
    def strands(self) -> int:
        return self.tree.leaf_count


@dataclass
class LeftAssociation:
    """왼쪽 결합 결과"""

    vector: TreeVector
    uncertified: List[str] = field(default_factory=list)
    verified: Optional[bool] = None

    @property
    def certified(self) -> bool:
        return not self.uncertified


class RuleCertificate(BaseModel):
    """규칙 인스턴스 하나의 인증 결과"""

    family: str = Field(..., description="규칙 계열")
    instance: str = Field(..., description="인스턴스 키")
    provenance: Provenance = Field(..., description="계수 출처")
    certified: bool = Field(..., description="lhs 와 rhs 전개가 정확히 같은지")
    coefficients: Dict[str, str] = Field(default_factory=dict, description="rhs 트리별 계수")
    lhs_terms: int = Field(0, description="lhs 다이어그램 항 수")
    rhs_terms: int = Field(0, description="rhs 다이어그램 항 수")
    residual_terms: int = Field(0, description="차이의 항 수")
    execution_time_seconds: Optional[float] = Field(None, description="인증 시간(초)")


class RMatrixEntry(BaseModel):
    """두 잎 섹터 하나의 R 고유값"""

    sign: int = Field(..., description="교차 부호")
    root: str = Field(..., description="뿌리 라벨")
    oracle: str = Field(..., description="오라클 고유값")
    expected: str = Field(..., description="닫힌 식 (A⁸, −A⁴ 또는 역수)")
    matches: bool = Field(..., description="틀 단항식을 곱한 뒤 일치하는지")


class RMatrixReport(BaseModel):
    """R 행렬 비교 보고서"""

    entries: List[RMatrixEntry] = Field(default_factory=list)
    framing_exponent: Optional[int] = Field(None, description="oracle = A^k · expected 인 k")
    ratio: str = Field(..., description="음의 교차에서 λ(*)/λ(P)")
    ratio_matches: bool = Field(..., description="비율이 −A⁴ 인지")


class LemmaReport(BaseModel):
    """트리 하나에 대한 보조 규칙 적용 결과"""

    rule: str = Field(..., description="규칙 이름")
    input: str = Field(..., description="입력 트리")
    terms: Dict[str, str] = Field(default_factory=dict, description="출력 트리별 계수")
    certified: bool = Field(..., description="사용한 국소 규칙이 모두 인증되었는지")
    named_matches: Dict[str, List[str]] = Field(
        default_factory=dict, description="c1..c4 와 같은 계수를 가진 출력 트리"
    )


Crossing = Union[int, str]
TreeInput = Union[LabeledTree, TreeVector]
LetterSeq = Sequence[Letter]
