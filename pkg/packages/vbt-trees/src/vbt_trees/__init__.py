"""
vbt-trees

융합 트리 모양과 P, *, P̃ 간선 라벨, 허용성 규칙, 다이어그램 전개,
쌍선형 형식(그람 행렬), 라벨 열거와 채널 분해를 제공하는 모듈입니다.
"""

from .exceptions import BadLocator, InadmissibleTree, ShapeMismatch, TreeException, TreeSyntaxError
from .grammar import GRAMMAR_HINT, format_shape, parse_shape, parse_tree, parse_tree_or_shape
from .models import (
    PARTICLE_ORDER,
    STRAND_COUNT,
    Channel,
    EdgeLabel,
    LabeledTree,
    Leaf,
    Mode,
    Node,
    ParticleLabel,
    TreeShape,
    TreeVector,
    format_tree,
    is_left_comb,
    label_tree,
    left_comb,
    tree_sort_key,
)
from .service import (
    TreeService,
    canonicalize,
    canonicalize_vector,
    channel_basis,
    channel_vertex_nonzero,
    check_admissible,
    count_labelings,
    decorated_basis,
    edge_projector,
    enumerate_labelings,
    expand,
    from_channels,
    fusion_allowed,
    gram_matrix,
    is_admissible,
    is_canonical,
    junction,
    pairing,
    pairing_with_diagram,
    to_channels,
    toggle,
    vector_from_channels,
    vector_to_channels,
)

__version__ = "1.0.0"

__all__ = [
    # Service
    "TreeService",
    "fusion_allowed",
    "check_admissible",
    "is_admissible",
    "junction",
    "edge_projector",
    "expand",
    "pairing",
    "pairing_with_diagram",
    "gram_matrix",
    "enumerate_labelings",
    "count_labelings",
    "canonicalize",
    "canonicalize_vector",
    "is_canonical",
    "toggle",
    "to_channels",
    "from_channels",
    "vector_to_channels",
    "vector_from_channels",
    "channel_vertex_nonzero",
    "decorated_basis",
    "channel_basis",
    # Grammar
    "parse_tree",
    "parse_shape",
    "parse_tree_or_shape",
    "format_shape",
    "GRAMMAR_HINT",
    # Models
    "ParticleLabel",
    "Channel",
    "Mode",
    "EdgeLabel",
    "Leaf",
    "Node",
    "TreeShape",
    "LabeledTree",
    "TreeVector",
    "PARTICLE_ORDER",
    "STRAND_COUNT",
    "format_tree",
    "label_tree",
    "left_comb",
    "is_left_comb",
    "tree_sort_key",
    # Exceptions
    "TreeException",
    "InadmissibleTree",
    "ShapeMismatch",
    "TreeSyntaxError",
    "BadLocator",
]
