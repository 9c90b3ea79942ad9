"""
다이어그램 대수 서비스

합성, 텐서곱, 닫기, 스케인 스무딩, 2가닥 사영자 등
재결합 규칙을 검증하는 기준(오라클) 연산을 제공합니다.
"""

import logging
import re
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from vbt_scalars import Scalar, constants
from vbt_scalars.utils import ModuleIOLogger

from .exceptions import BoundaryMismatch, InvalidPairing
from .models import Diagram, DiagramLike, DiagramSum, as_sum

logger = logging.getLogger(__name__)

# (종류, 인덱스, 지수); 종류 "s" 는 고전 교차, "v" 는 가상 교차, 인덱스는 1부터
Letter = Tuple[str, int, int]

_TEXT_PATTERN = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*:(.*)$")


@lru_cache(maxsize=None)
def _loop_power(loops: int) -> Scalar:
    return constants().d ** loops


@lru_cache(maxsize=1 << 16)
def compose_diagrams(lower: Diagram, upper: Diagram) -> Tuple[Diagram, int]:
    """lower 위에 upper 를 쌓은 다이어그램과 닫힌 고리 개수"""
    mid = lower.top_count
    if upper.bottom_count != mid:
        raise BoundaryMismatch("compose", mid, upper.bottom_count)
    bot, top = lower.bottom_count, upper.top_count
    low, up = lower.pairing, upper.pairing
    result = [-1] * (bot + top)
    visited = [False] * mid

    for start in range(bot + top):
        if result[start] != -1:
            continue
        # (on_lower, 해당 다이어그램에서의 점)
        on_lower, point = (True, start) if start < bot else (False, mid + start - bot)
        while True:
            if on_lower:
                target = low[point]
                if target < bot:
                    end = target
                    break
                visited[target - bot] = True
                on_lower, point = False, target - bot
            else:
                target = up[point]
                if target >= mid:
                    end = bot + target - mid
                    break
                visited[target] = True
                on_lower, point = True, bot + target
        result[start], result[end] = end, start

    loops = 0
    for j in range(mid):
        if visited[j]:
            continue
        loops += 1
        current = j
        while True:
            visited[current] = True
            partner = up[current]
            visited[partner] = True
            current = low[bot + partner] - bot
            if current == j:
                break
    return Diagram(bot, top, tuple(result)), loops


def compose(lower: DiagramLike, upper: DiagramLike) -> DiagramSum:
    """쌍선형 합성; 닫힌 고리마다 d 를 곱한다"""
    pieces = []
    for d1, c1 in as_sum(lower).items():
        for d2, c2 in as_sum(upper).items():
            diagram, loops = compose_diagrams(d1, d2)
            coeff = c1 * c2
            if loops:
                coeff = coeff * _loop_power(loops)
            pieces.append((diagram, coeff))
    return DiagramSum._accumulate(pieces)


def compose_all(layers: Sequence[DiagramLike]) -> DiagramSum:
    """layers[0] 이 가장 아래"""
    result = as_sum(layers[0])
    for layer in layers[1:]:
        result = compose(result, layer)
    return result


@lru_cache(maxsize=1 << 14)
def tensor_diagrams(left: Diagram, right: Diagram) -> Diagram:
    b1, t1 = left.bottom_count, left.top_count
    b2, t2 = right.bottom_count, right.top_count
    bottoms = b1 + b2

    def move_left(p: int) -> int:
        return p if p < b1 else bottoms + (p - b1)

    def move_right(p: int) -> int:
        return b1 + p if p < b2 else bottoms + t1 + (p - b2)

    table = [0] * (bottoms + t1 + t2)
    for p, q in enumerate(left.pairing):
        table[move_left(p)] = move_left(q)
    for p, q in enumerate(right.pairing):
        table[move_right(p)] = move_right(q)
    return Diagram(bottoms, t1 + t2, tuple(table))


def tensor(left: DiagramLike, right: DiagramLike) -> DiagramSum:
    """나란히 놓기 (left 가 왼쪽)"""
    pieces = [
        (tensor_diagrams(d1, d2), c1 * c2)
        for d1, c1 in as_sum(left).items()
        for d2, c2 in as_sum(right).items()
    ]
    return DiagramSum._accumulate(pieces)


def mirror_diagram(diagram: Diagram) -> Diagram:
    b, t = diagram.bottom_count, diagram.top_count

    def move(p: int) -> int:
        return t + p if p < b else p - b

    table = [0] * (b + t)
    for p, q in enumerate(diagram.pairing):
        table[move(p)] = move(q)
    return Diagram(t, b, tuple(table))


def mirror(x: DiagramLike) -> DiagramSum:
    """위아래 뒤집기"""
    return DiagramSum({mirror_diagram(d): c for d, c in as_sum(x).items()})


def count_closure_loops(diagram: Diagram) -> int:
    """위쪽 점 i 를 아래쪽 점 i 에 이었을 때의 고리 개수 (union-find)"""
    n = diagram.bottom_count
    if diagram.top_count != n:
        raise BoundaryMismatch("close", n, diagram.top_count)
    parent = list(range(2 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for p, q in enumerate(diagram.pairing):
        union(p, q)
    for i in range(n):
        union(i, n + i)
    return len({find(p) for p in range(2 * n)})


def close(x: DiagramLike) -> Scalar:
    """마르코프 닫기: Σ 계수 · d^고리"""
    total = Scalar(0)
    for diagram, coeff in as_sum(x).items():
        total = total + coeff * _loop_power(count_closure_loops(diagram))
    return total


def identity(strands: int) -> DiagramSum:
    return DiagramSum.of(Diagram.identity(strands))


def cupcap() -> Diagram:
    """아래 두 점끼리, 위 두 점끼리 잇는 2가닥 다이어그램"""
    return Diagram.from_pairs(2, 2, [(0, 1), (2, 3)])


def cup() -> Diagram:
    """아래 경계 없이 위 두 점을 잇는 다이어그램"""
    return Diagram.from_pairs(0, 2, [(0, 1)])


def virtual_transposition() -> Diagram:
    return Diagram.from_pairs(2, 2, [(0, 3), (1, 2)])


def smooth_crossing(sign: int) -> DiagramSum:
    """양의 교차 ↦ A·id + A⁻¹·e, 음의 교차 ↦ A⁻¹·id + A·e"""
    if sign not in (1, -1):
        raise ValueError(f"crossing sign must be +1 or -1, got {sign}")
    return DiagramSum({
        Diagram.identity(2): Scalar.monomial(sign),
        cupcap(): Scalar.monomial(-sign),
    })


@lru_cache(maxsize=1)
def projector2() -> DiagramSum:
    """P₂ = id − e/d"""
    inv_d = constants().d.inverse()
    return DiagramSum({Diagram.identity(2): 1, cupcap(): -inv_d})


def embed(x: DiagramLike, offset: int, strands: int) -> DiagramSum:
    """x 를 offset 위치에 놓고 나머지 가닥은 항등으로 채운다"""
    x = as_sum(x)
    widths = {b for b, t in x.shapes() if b == t}
    if x.is_zero:
        return x
    if len(widths) != 1 or len(x.shapes()) != 1:
        raise BoundaryMismatch("embed", strands, -1)
    width = widths.pop()
    if offset < 0 or offset + width > strands:
        raise BoundaryMismatch("embed", strands, offset + width)
    result = x
    if offset:
        result = tensor(identity(offset), result)
    rest = strands - offset - width
    if rest:
        result = tensor(result, identity(rest))
    return result


def cable_swap() -> Diagram:
    """두 2가닥 케이블의 가상 교차"""
    return Diagram.from_pairs(4, 4, [(0, 6), (1, 7), (2, 4), (3, 5)])


@lru_cache(maxsize=2)
def cable_crossing(sign: int) -> DiagramSum:
    """두 2가닥 케이블의 고전 교차 = σ2 σ1 σ3 σ2 (모두 같은 부호)"""
    crossing = smooth_crossing(sign)
    middle = embed(crossing, 1, 4)
    outer = tensor(crossing, crossing)
    return compose_all([middle, outer, middle])


def letter_diagram(kind: str, power: int, cable_width: int = 1) -> DiagramSum:
    """한 글자의 국소 다이어그램 (2 · cable_width 가닥)"""
    if kind == "v":
        if power % 2 == 0:
            return identity(2 * cable_width)
        return DiagramSum.of(virtual_transposition() if cable_width == 1 else cable_swap())
    if kind != "s":
        raise ValueError(f"unknown letter kind '{kind}'")
    sign = 1 if power > 0 else -1
    local = smooth_crossing(sign) if cable_width == 1 else cable_crossing(sign)
    result = identity(2 * cable_width)
    for _ in range(abs(power)):
        result = compose(result, local)
    return result


def braid_diagram(letters: Iterable[Letter], strands: int, cable_width: int = 1) -> DiagramSum:
    """
    땋임 단어의 오라클 상.

    첫 글자가 맨 위에 놓이므로 B(w1 w2) 는 B(w2) 위에 B(w1) 을 쌓은 것이다.
    strands 는 케이블 개수이며, 전체 가닥 수는 strands · cable_width 이다.
    """
    total = strands * cable_width
    result = identity(total)
    for kind, index, power in letters:
        if not 1 <= index < strands:
            raise BoundaryMismatch("braid_diagram", strands, index + 1)
        local = letter_diagram(kind, power, cable_width)
        result = compose(embed(local, (index - 1) * cable_width, total), result)
    return result


def reduce_turnbacks(
    x: DiagramLike,
    top_cables: Sequence[Tuple[int, int]] = (),
    bottom_cables: Sequence[Tuple[int, int]] = (),
) -> DiagramSum:
    """
    사영된 케이블의 두 점을 직접 잇는 항을 버린다 (P₂ ∘ 되돌이 = 0).
    케이블 점은 각 변의 국소 번호로 준다.
    """
    kept = {}
    for diagram, coeff in as_sum(x).items():
        b = diagram.bottom_count
        hit = any(diagram.pairing[i] == j for i, j in bottom_cables) or any(
            diagram.pairing[b + i] == b + j for i, j in top_cables
        )
        if not hit:
            kept[diagram] = coeff
    return DiagramSum(kept)


def parse_diagram(text: str) -> Diagram:
    """`n_bot/n_top: i-j, k-l, ...` 형식 파싱"""
    match = _TEXT_PATTERN.match(text)
    if not match:
        raise InvalidPairing("expected 'n_bot/n_top: i-j, ...'", text)
    bottom, top, body = int(match.group(1)), int(match.group(2)), match.group(3).strip()
    pairs: List[Tuple[int, int]] = []
    if body:
        for chunk in body.split(","):
            pieces = chunk.strip().split("-")
            if len(pieces) != 2 or not all(p.strip().isdigit() for p in pieces):
                raise InvalidPairing(f"bad pair '{chunk.strip()}'", text)
            pairs.append((int(pieces[0]), int(pieces[1])))
    return Diagram.from_pairs(bottom, top, pairs)


def format_diagram(diagram: Diagram) -> str:
    return diagram.to_text()


class DiagramService:
    """다이어그램 오라클 서비스"""

    def __init__(self) -> None:
        self.io_logger = ModuleIOLogger("DiagramService")

    def compose(self, lower: DiagramLike, upper: DiagramLike) -> DiagramSum:
        self.io_logger.log_input("compose", lower_terms=len(as_sum(lower)), upper_terms=len(as_sum(upper)))
        try:
            result = compose(lower, upper)
        except BoundaryMismatch as exc:
            self.io_logger.log_error("compose", exc)
            raise
        self.io_logger.log_output("compose", result)
        return result

    def tensor(self, left: DiagramLike, right: DiagramLike) -> DiagramSum:
        return tensor(left, right)

    def close(self, x: DiagramLike) -> Scalar:
        self.io_logger.log_input("close", terms=len(as_sum(x)))
        try:
            result = close(x)
        except BoundaryMismatch as exc:
            self.io_logger.log_error("close", exc)
            raise
        self.io_logger.log_output("close", result)
        return result

    def smooth_crossing(self, sign: int) -> DiagramSum:
        return smooth_crossing(sign)

    def virtual_transposition(self) -> Diagram:
        return virtual_transposition()

    def projector2(self) -> DiagramSum:
        return projector2()

    def braid_diagram(self, letters: Iterable[Letter], strands: int, cable_width: int = 1) -> DiagramSum:
        letters = list(letters)
        self.io_logger.log_input("braid_diagram", letters=len(letters), strands=strands)
        return braid_diagram(letters, strands, cable_width)
