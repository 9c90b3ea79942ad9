"""
땋임 텍스트 문법

    braid  := "n=" int ";" letter*
    letter := "s" int | "s" int "^-1" | "v" int

글자는 공백으로 구분하며 인덱스는 1..n−1 이다.
"""

import re
from typing import List

from vbt_diagrams import Letter

from .exceptions import BraidSyntaxError, IndexOutOfRange
from .models import BraidWord

GRAMMAR_HINT = "braid := 'n=<int>;' followed by letters 's<k>', 's<k>^-1', 'v<k>' with 1 <= k <= n-1"

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*;")
_LETTER = re.compile(r"(s|v)(\d+)(\^-1)?$")


def parse_letters(text: str, strands: int, offset: int = 0) -> List[Letter]:
    letters: List[Letter] = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        position = offset + match.start()
        parsed = _LETTER.match(token)
        if parsed is None:
            raise BraidSyntaxError(text, position, f"unknown letter '{token}'")
        kind, index, inverse = parsed.group(1), int(parsed.group(2)), parsed.group(3)
        if kind == "v" and inverse:
            raise BraidSyntaxError(text, position, "virtual generators are involutions and take no '^-1'")
        if not 1 <= index < strands:
            raise IndexOutOfRange(token, strands)
        letters.append((kind, index, -1 if inverse else 1))
    return letters


def parse_braid(text: str, normalize: bool = True) -> BraidWord:
    """`n=3; s1 s2^-1 v1` → BraidWord (기본적으로 자유 약분까지)"""
    header = _HEADER.match(text)
    if header is None:
        raise BraidSyntaxError(text, 0, "expected header 'n=<int>;'")
    strands = int(header.group(1))
    if strands < 1:
        raise BraidSyntaxError(text, header.start(1), "a braid needs at least one strand")
    try:
        letters = parse_letters(text[header.end():], strands, header.end())
    except BraidSyntaxError as exc:
        raise BraidSyntaxError(text, exc.details["position"], exc.details["reason"]) from exc
    word = BraidWord(strands, tuple(letters))
    return word.normalized() if normalize else word
