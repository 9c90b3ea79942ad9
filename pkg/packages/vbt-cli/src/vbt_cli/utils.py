"""
직렬화 유틸리티

Scalar 와 TreeVector 를 결정적인 JSON 구조로 바꾸고 다시 읽습니다.
"""

import json
from typing import Any, Dict, List, Optional

from vbt_scalars import Scalar
from vbt_trees import TreeVector, format_tree, parse_tree


def _round(value: float, precision: int) -> float:
    return round(value, precision) + 0.0


def scalar_payload(value: Scalar, at: Optional[complex] = None, precision: int = 12) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"exact": value.to_dict(), "text": str(value)}
    if at is not None:
        number = value.evaluate(at)
        payload["numeric"] = {"re": _round(number.real, precision), "im": _round(number.imag, precision)}
    return payload


def scalar_from_payload(payload: Dict[str, Any]) -> Scalar:
    return Scalar.from_dict(payload["exact"])


def vector_payload(vector: TreeVector, at: Optional[complex] = None, precision: int = 12) -> List[Dict[str, Any]]:
    return [
        {"tree": format_tree(tree), "coefficient": scalar_payload(coeff, at, precision)}
        for tree, coeff in vector.sorted_items()
    ]


def vector_from_payload(payload: List[Dict[str, Any]]) -> TreeVector:
    return TreeVector.accumulate(
        (parse_tree(term["tree"]), scalar_from_payload(term["coefficient"])) for term in payload
    )


def render_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text_lines(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        if "text" in value and "exact" in value:
            numeric = value.get("numeric")
            suffix = f"  ≈ {numeric['re']} + {numeric['im']}i" if numeric else ""
            return [f"{pad}{value['text']}{suffix}"]
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            lines.extend(_text_lines(item, indent))
        return lines
    return [f"{pad}{value}"]


def render_text(payload: Dict[str, Any]) -> str:
    return "\n".join(_text_lines(payload)) + "\n"
