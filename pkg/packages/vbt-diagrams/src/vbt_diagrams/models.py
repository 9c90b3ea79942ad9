"""
다이어그램 데이터 모델

경계 점의 고정점 없는 대합(Diagram)과 그 Scalar 계수 선형결합(DiagramSum).
아래쪽 점은 왼쪽부터 0..bottom_count-1, 위쪽 점은 그 뒤에 이어서 번호를 매긴다.
평면성은 요구하지 않으며, 평면이 아닌 짝짓기가 가상 교차를 나타낸다.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from vbt_scalars import Scalar, as_scalar

from .exceptions import InvalidPairing

Coefficient = Union[Scalar, int]


@dataclass(frozen=True)
class Diagram:
    """고정점 없는 대합으로 표현된 짝짓기 다이어그램"""

    bottom_count: int
    top_count: int
    pairing: Tuple[int, ...]

    def __post_init__(self) -> None:
        size = self.bottom_count + self.top_count
        if self.bottom_count < 0 or self.top_count < 0:
            raise InvalidPairing("negative boundary count", self.pairing)
        if len(self.pairing) != size:
            raise InvalidPairing(f"expected {size} entries", self.pairing)
        for point, partner in enumerate(self.pairing):
            if not 0 <= partner < size or partner == point or self.pairing[partner] != point:
                raise InvalidPairing(f"point {point} is not properly matched", self.pairing)

    @classmethod
    def from_pairs(cls, bottom_count: int, top_count: int, pairs: Iterable[Tuple[int, int]]) -> "Diagram":
        size = bottom_count + top_count
        table: List[int] = [-1] * size
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size) or table[i] != -1 or table[j] != -1:
                raise InvalidPairing(f"pair {i}-{j} is out of range or repeated", pairs)
            table[i], table[j] = j, i
        if -1 in table:
            raise InvalidPairing(f"point {table.index(-1)} is unmatched", pairs)
        return cls(bottom_count, top_count, tuple(table))

    @classmethod
    def identity(cls, strands: int) -> "Diagram":
        return cls.from_pairs(strands, strands, ((i, strands + i) for i in range(strands)))

    @classmethod
    def empty(cls) -> "Diagram":
        return cls(0, 0, ())

    def pairs(self) -> List[Tuple[int, int]]:
        """사전식 정렬된 (i, j), i < j 목록"""
        return sorted((i, j) for i, j in enumerate(self.pairing) if i < j)

    def is_planar(self) -> bool:
        # 경계를 원 위에 놓으면 아래쪽은 왼→오, 위쪽은 오→왼 순서
        def position(point: int) -> int:
            if point < self.bottom_count:
                return point
            return self.bottom_count + self.top_count - 1 - (point - self.bottom_count)

        chords = [tuple(sorted((position(i), position(j)))) for i, j in self.pairs()]
        for a, b in chords:
            for c, e in chords:
                if a < c < b < e:
                    return False
        return True

    def to_text(self) -> str:
        body = ", ".join(f"{i}-{j}" for i, j in self.pairs())
        return f"{self.bottom_count}/{self.top_count}: {body}".rstrip()

    def __str__(self) -> str:
        return self.to_text()


class DiagramSum:
    """Diagram 을 기저로 하는 형식적 선형결합 (0 계수 없음)"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Diagram, Coefficient]] = None):
        cleaned: Dict[Diagram, Scalar] = {}
        for diagram, coeff in (terms or {}).items():
            value = as_scalar(coeff)
            if value:
                cleaned[diagram] = value
        self._terms = cleaned

    @classmethod
    def of(cls, diagram: Diagram, coeff: Coefficient = 1) -> "DiagramSum":
        return cls({diagram: coeff})

    @classmethod
    def zero(cls) -> "DiagramSum":
        return cls()

    @classmethod
    def _accumulate(cls, pieces: Iterable[Tuple[Diagram, Scalar]]) -> "DiagramSum":
        acc: Dict[Diagram, Scalar] = {}
        for diagram, coeff in pieces:
            if diagram in acc:
                acc[diagram] = acc[diagram] + coeff
            else:
                acc[diagram] = coeff
        return cls(acc)

    @property
    def terms(self) -> Dict[Diagram, Scalar]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[Tuple[Diagram, Scalar]]:
        return iter(self._terms.items())

    def coefficient(self, diagram: Diagram) -> Scalar:
        return self._terms.get(diagram, Scalar(0))

    def shapes(self) -> set:
        return {(d.bottom_count, d.top_count) for d in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Diagram):
            other = DiagramSum.of(other)
        if not isinstance(other, DiagramSum):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "DiagramSum") -> "DiagramSum":
        return DiagramSum._accumulate(list(self.items()) + list(other.items()))

    def __neg__(self) -> "DiagramSum":
        return DiagramSum({d: -c for d, c in self.items()})

    def __sub__(self, other: "DiagramSum") -> "DiagramSum":
        return self + (-other)

    def scale(self, coeff: Coefficient) -> "DiagramSum":
        factor = as_scalar(coeff)
        if not factor:
            return DiagramSum()
        return DiagramSum({d: c * factor for d, c in self.items()})

    def __rmul__(self, coeff: Coefficient) -> "DiagramSum":
        return self.scale(coeff)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        lines = sorted(f"({coeff}) [{diagram}]" for diagram, coeff in self.items())
        return " + ".join(lines)

    def __repr__(self) -> str:
        return f"DiagramSum({self.to_text()})"


DiagramLike = Union[Diagram, DiagramSum]


def as_sum(value: DiagramLike) -> DiagramSum:
    if isinstance(value, DiagramSum):
        return value
    return DiagramSum.of(value)
