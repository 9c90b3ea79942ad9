"""
vbt-recoupling

가상 땋임 트리의 재결합 계산: F, R, 가상 교환, 거품과 되돌이 축약,
합성 규칙, 왼쪽 결합 엔진과 규칙 인증을 제공하는 모듈입니다.
모든 국소 규칙은 다이어그램 오라클에 대해 정확한 인증서를 가집니다.
"""

from .engine import apply_letter, apply_word, is_classical, left_associate, oracle_residual_free, rebracket
from .exceptions import (
    BadPosition,
    NotClassicalCrossing,
    NotClassicalFragment,
    NotVirtualCrossing,
    PatternMismatch,
    RecouplingException,
    SingularBasis,
)
from .models import (
    Direction,
    FConvention,
    LeftAssociation,
    LemmaReport,
    LocalRule,
    Provenance,
    RewriteRule,
    RMatrixEntry,
    RMatrixReport,
    RuleCertificate,
    VirtualBraidedTree,
)
from .rules import (
    bubble_coefficient,
    classical_f_rule,
    classical_fragment_rule,
    classical_letter_rule,
    f_rule,
    fragment_rule,
    letter_rule,
    vertex_rule,
)
from .service import (
    RULE_FAMILIES,
    RecouplingService,
    bubble_reduce,
    certify,
    f_move,
    lemma1_rule,
    lemma2_rule,
    lemma3_rule,
    lemma_report,
    lemma_rule,
    r_matrix_report,
    r_move,
    rule_registry,
    swap_move,
    turnback_reduce,
)

__version__ = "1.0.0"

__all__ = [
    # Service
    "RecouplingService",
    "f_move",
    "r_move",
    "swap_move",
    "bubble_reduce",
    "turnback_reduce",
    "bubble_coefficient",
    "lemma1_rule",
    "lemma2_rule",
    "lemma3_rule",
    "lemma_rule",
    "lemma_report",
    "left_associate",
    "apply_word",
    "apply_letter",
    "rebracket",
    "is_classical",
    "oracle_residual_free",
    "rule_registry",
    "certify",
    "r_matrix_report",
    "RULE_FAMILIES",
    # Local rules
    "f_rule",
    "letter_rule",
    "fragment_rule",
    "vertex_rule",
    "classical_f_rule",
    "classical_letter_rule",
    "classical_fragment_rule",
    # Models
    "VirtualBraidedTree",
    "LeftAssociation",
    "LocalRule",
    "RewriteRule",
    "RuleCertificate",
    "RMatrixEntry",
    "RMatrixReport",
    "LemmaReport",
    "Provenance",
    "Direction",
    "FConvention",
    # Exceptions
    "RecouplingException",
    "BadPosition",
    "NotClassicalCrossing",
    "NotVirtualCrossing",
    "NotClassicalFragment",
    "PatternMismatch",
    "SingularBasis",
]
