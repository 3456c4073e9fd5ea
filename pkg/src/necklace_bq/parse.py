"""Parsing linear combinations of any element kind.

A combination is a sequence of terms joined by `` + `` / `` - ``; each term is
``basis`` or ``coeff * basis`` with ``coeff`` in the scalars grammar.  A bare
scalar stands for a multiple of the unit where the kind has one.
"""

from __future__ import annotations

from typing import Callable, Dict, Optional

from .envelope import parse_ue_word
from .heightlink import UNIT, parse_link
from .necklace import parse_monomial, parse_necklace
from .quiver import Quiver
from .scalars import LinComb, ScalarSyntaxError, parse_poly2, split_signed_terms
from .tensoralg import parse_word


class ExpressionError(ValueError):
    """A term could not be parsed; ``term`` and ``offset`` locate it in the input."""

    def __init__(self, message: str, term: str = "", offset: int = -1):
        where = f" (term {term!r} at offset {offset})" if term else ""
        super().__init__(message + where)
        self.term = term
        self.offset = offset


def _split_coeff(chunk: str):
    depth = 0
    for k, ch in enumerate(chunk):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "*" and depth == 0 and 0 < k < len(chunk) - 1 and chunk[k - 1] == " " and chunk[k + 1] == " ":
            return chunk[:k].strip(), chunk[k + 1:].strip()
    return None, chunk


def parse_lincomb(text: str, parse_key: Callable[[str], object], unit_key=None) -> LinComb:
    text = text.strip()
    if not text:
        raise ExpressionError("empty expression")
    if text == "0":
        return LinComb()
    acc: Dict = {}
    try:
        terms = list(split_signed_terms(text))
    except ScalarSyntaxError as exc:
        raise ExpressionError(str(exc)) from None
    for sign, chunk in terms:
        offset = text.find(chunk)
        cs, body = _split_coeff(chunk)
        try:
            if cs is None:
                try:
                    key, coeff = parse_key(body), parse_poly2("1")
                except (ValueError, KeyError):
                    if unit_key is None:
                        raise
                    key, coeff = unit_key, parse_poly2(body)
            else:
                key, coeff = parse_key(body), parse_poly2(cs)
        except (ValueError, KeyError) as exc:
            raise ExpressionError(str(exc), chunk, offset) from None
        acc[key] = acc.get(key, parse_poly2("0")) + coeff * sign
    return LinComb(acc)


KINDS = ("L", "S", "N", "F", "V")


def key_parser(q: Quiver, kind: str) -> Callable[[str], object]:
    return {
        "L": lambda s: parse_necklace(q, s),
        "S": lambda s: parse_monomial(q, s),
        "N": lambda s: parse_link(q, s),
        "F": lambda s: parse_word(q, s),
        "V": lambda s: parse_ue_word(q, s),
    }[kind]


UNIT_KEYS: Dict[str, Optional[object]] = {"L": None, "S": (), "N": UNIT, "F": (), "V": ()}


def parse_element(q: Quiver, kind: str, text: str) -> LinComb:
    """Parse ``text`` as an element of L, S(L), N(Q), F(L) or V_h(L)."""
    return parse_lincomb(text, key_parser(q, kind), UNIT_KEYS[kind])
