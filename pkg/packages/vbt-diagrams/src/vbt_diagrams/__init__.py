"""
vbt-diagrams

가상 교차(평면이 아닌 짝짓기)를 허용하는 Temperley-Lieb 형 다이어그램 대수.
재결합 규칙의 정확성을 판정하는 기준 오라클입니다.
"""

from .exceptions import BoundaryMismatch, DiagramException, InvalidPairing
from .models import Diagram, DiagramLike, DiagramSum, as_sum
from .service import (
    DiagramService,
    Letter,
    braid_diagram,
    cable_crossing,
    cable_swap,
    close,
    compose,
    compose_all,
    compose_diagrams,
    count_closure_loops,
    cup,
    cupcap,
    embed,
    format_diagram,
    identity,
    letter_diagram,
    mirror,
    parse_diagram,
    projector2,
    reduce_turnbacks,
    smooth_crossing,
    tensor,
    virtual_transposition,
)

__version__ = "1.0.0"

__all__ = [
    # Service
    "DiagramService",
    "compose",
    "compose_all",
    "compose_diagrams",
    "tensor",
    "mirror",
    "close",
    "count_closure_loops",
    "identity",
    "cup",
    "cupcap",
    "virtual_transposition",
    "smooth_crossing",
    "projector2",
    "embed",
    "cable_crossing",
    "cable_swap",
    "letter_diagram",
    "braid_diagram",
    "reduce_turnbacks",
    "parse_diagram",
    "format_diagram",
    "Letter",
    # Models
    "Diagram",
    "DiagramSum",
    "DiagramLike",
    "as_sum",
    # Exceptions
    "DiagramException",
    "BoundaryMismatch",
    "InvalidPairing",
]
