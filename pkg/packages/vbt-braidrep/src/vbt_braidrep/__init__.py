"""
vbt-braidrep

가상 땋임 단어의 파싱과 정규화, 왼쪽 빗 공간 위의 작용 행렬,
VB_n 관계 검사와 땋임 닫힘의 괄호 다항식을 제공하는 모듈입니다.
"""

from .exceptions import BasisDeficiency, BraidException, BraidSyntaxError, IndexOutOfRange, StrandMismatch
from .grammar import GRAMMAR_HINT, parse_braid, parse_letters
from .models import (
    BracketResult,
    BraidWord,
    RelationReport,
    RelationResult,
    RepMatrix,
    format_braid,
    format_letter,
)
from .service import (
    BraidRepService,
    bracket_closure,
    check_relations,
    classical_basis,
    classical_rep_matrix,
    is_identity,
    random_word,
    relation_instances,
    rep_matrix,
    sector_basis,
    unitarity_residual,
)

__version__ = "1.0.0"

__all__ = [
    # Service
    "BraidRepService",
    "rep_matrix",
    "classical_rep_matrix",
    "classical_basis",
    "sector_basis",
    "check_relations",
    "relation_instances",
    "bracket_closure",
    "random_word",
    "unitarity_residual",
    "is_identity",
    # Grammar
    "parse_braid",
    "parse_letters",
    "GRAMMAR_HINT",
    # Models
    "BraidWord",
    "RepMatrix",
    "RelationResult",
    "RelationReport",
    "BracketResult",
    "format_braid",
    "format_letter",
    # Exceptions
    "BraidException",
    "BraidSyntaxError",
    "IndexOutOfRange",
    "StrandMismatch",
    "BasisDeficiency",
]
