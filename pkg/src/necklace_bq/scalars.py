"""Exact coefficients: rationals, polynomials in h and hbar, sparse linear combinations.

Rationals are :class:`fractions.Fraction`.  Everything downstream stores its
coefficients as :class:`Poly2` and its formal sums as :class:`LinComb`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple

Rational = Fraction
Monomial = Tuple[int, int]  # (degree in h, degree in hbar)


class Poly2:
    """Polynomial in the two formal parameters h and hbar over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = Fraction(c)
                if c:
                    clean[(i, j)] = clean.get((i, j), 0) + c
                    if not clean[(i, j)]:
                        del clean[(i, j)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Poly2":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly2":
        c = Fraction(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c, deg_h: int = 0, deg_hbar: int = 0) -> "Poly2":
        c = Fraction(c)
        return cls._raw({(deg_h, deg_hbar): c} if c else {})

    @classmethod
    def coerce(cls, x) -> "Poly2":
        if isinstance(x, Poly2):
            return x
        return cls.const(x)

    # -- access ---------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in sorted exponent order."""
        for k in sorted(self._terms):
            yield k, self._terms[k]

    def coeff(self, deg_h: int, deg_hbar: int) -> Fraction:
        return self._terms.get((deg_h, deg_hbar), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def degree_h(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_hbar(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def min_degree_h(self) -> int:
        return min((i for i, _ in self._terms), default=0)

    def min_degree_hbar(self) -> int:
        return min((j for _, j in self._terms), default=0)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Poly2":
        other = Poly2.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "Poly2":
        return self + (-Poly2.coerce(other))

    def __rsub__(self, other) -> "Poly2":
        return Poly2.coerce(other) - self

    def __mul__(self, other) -> "Poly2":
        other = Poly2.coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return Poly2._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly2":
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def shift(self, deg_h: int = 0, deg_hbar: int = 0) -> "Poly2":
        """Multiply by h^deg_h hbar^deg_hbar; negative shifts require exact divisibility."""
        out = {}
        for (i, j), c in self._terms.items():
            i2, j2 = i + deg_h, j + deg_hbar
            if i2 < 0 or j2 < 0:
                raise ArithmeticError(f"{self} is not divisible by h^{-deg_h} hbar^{-deg_hbar}")
            out[(i2, j2)] = c
        return Poly2._raw(out)

    def div_h(self) -> "Poly2":
        return self.shift(deg_h=-1)

    def div_hbar(self) -> "Poly2":
        return self.shift(deg_hbar=-1)

    def specialize(self, set_h=None, set_hbar=None) -> "Poly2":
        """Substitute values for h and/or hbar, leaving the other parameter formal."""
        if set_h is None and set_hbar is None:
            return self
        out: Dict[Monomial, Fraction] = {}
        sh = None if set_h is None else Fraction(set_h)
        sb = None if set_hbar is None else Fraction(set_hbar)
        for (i, j), c in self._terms.items():
            if sh is not None:
                c = c * sh ** i
                i = 0
            if sb is not None:
                c = c * sb ** j
                j = 0
            if c:
                v = out.get((i, j), 0) + c
                if v:
                    out[(i, j)] = v
                else:
                    out.pop((i, j), None)
        return Poly2._raw(out)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly2):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- printing -------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly2({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for n, (k, c) in enumerate(self.terms()):
            sign = "-" if c < 0 else "+"
            body = _monomial_str(abs(c), *k)
            if n == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1


def _rational_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _monomial_str(c: Fraction, i: int, j: int) -> str:
    parts = []
    if c != 1 or (i == 0 and j == 0):
        parts.append(_rational_str(c))
    if i:
        parts.append("h" if i == 1 else f"h^{i}")
    if j:
        parts.append("hbar" if j == 1 else f"hbar^{j}")
    return "*".join(parts)


ZERO = Poly2()
ONE = Poly2.const(1)
H = Poly2.monomial(1, 1, 0)
HBAR = Poly2.monomial(1, 0, 1)


def poly_mul(p: Poly2, q: Poly2) -> Poly2:
    return p * q


def specialize(p: Poly2, set_h=None, set_hbar=None) -> Poly2:
    return p.specialize(set_h, set_hbar)


# ---------------------------------------------------------------------------
# parsing

_FACTOR = re.compile(
    r"\s*(?:(?P<paren>\(\s*-?\d+\s*(?:/\s*\d+\s*)?\))"
    r"|(?P<rat>\d+(?:\s*/\s*\d+)?)"
    r"|(?P<hbar>hbar|ħ)(?:\^(?P<hbar_exp>\d+))?"
    r"|(?P<h>h)(?:\^(?P<h_exp>\d+))?)\s*"
)


class ScalarSyntaxError(ValueError):
    pass


def _parse_monomial(text: str) -> Poly2:
    pos, n = 0, len(text)
    coeff, i, j = Fraction(1), 0, 0
    first = True
    while True:
        if not first:
            if pos >= n:
                break
            if text[pos] != "*":
                raise ScalarSyntaxError(f"expected '*' at offset {pos} in {text!r}")
            pos += 1
        m = _FACTOR.match(text, pos)
        if not m or m.end() == pos:
            raise ScalarSyntaxError(f"bad scalar factor at offset {pos} in {text!r}")
        if m.group("paren"):
            coeff *= Fraction(m.group("paren").strip("() ").replace(" ", ""))
        elif m.group("rat"):
            coeff *= Fraction(m.group("rat").replace(" ", ""))
        elif m.group("hbar"):
            j += int(m.group("hbar_exp") or 1)
        else:
            i += int(m.group("h_exp") or 1)
        pos = m.end()
        first = False
    return Poly2.monomial(coeff, i, j)


def split_signed_terms(text: str) -> Iterator[Tuple[int, str]]:
    """Split ``text`` at top-level binary ``+``/``-`` (outside parentheses and brackets).

    A binary operator must be surrounded by whitespace, except that a leading
    sign is allowed; this keeps starred edge names like ``a*`` and negative
    rationals inside parentheses intact.
    """
    depth = 0
    sign = 1
    start = 0
    text = text.strip()
    if text.startswith("-"):
        sign, start = -1, 1
    elif text.startswith("+"):
        start = 1
    k = start
    while k < len(text):
        ch = text[k]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and k > 0 and text[k - 1].isspace() and k + 1 < len(text) and text[k + 1].isspace():
            chunk = text[start:k].strip()
            if not chunk:
                raise ScalarSyntaxError(f"empty term in {text!r}")
            yield sign, chunk
            sign = 1 if ch == "+" else -1
            start = k + 1
        k += 1
    chunk = text[start:].strip()
    if not chunk:
        raise ScalarSyntaxError(f"empty term in {text!r}")
    yield sign, chunk


def parse_poly2(text: str) -> Poly2:
    """Parse ``2*h - (1/3)*h^2*hbar + ħ`` style polynomials."""
    text = text.strip()
    if text.startswith("(") and _matching_paren(text, 0) == len(text) - 1:
        inner = text[1:-1].strip()
        # "(1/2)" is a rational factor, "(1 + h)" a grouped polynomial
        if re.fullmatch(r"-?\d+\s*(/\s*\d+)?", inner) is None:
            return parse_poly2(inner)
    total = ZERO
    for sign, chunk in split_signed_terms(text):
        total = total + _parse_monomial(chunk.replace(" ", "")) * sign
    return total


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for k in range(start, len(text)):
        if text[k] == "(":
            depth += 1
        elif text[k] == ")":
            depth -= 1
            if depth == 0:
                return k
    return -1


# ---------------------------------------------------------------------------
# formal linear combinations


class LinComb:
    """Finite formal sum of hashable basis keys with :class:`Poly2` coefficients.

    Keys must already be canonical; the class never inspects them beyond
    hashing, equality and (for printing) an optional sort key.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Hashable, object]] = None):
        clean: Dict[Hashable, Poly2] = {}
        if terms:
            for k, c in terms.items():
                c = Poly2.coerce(c)
                if c:
                    prev = clean.get(k)
                    c = c if prev is None else prev + c
                    if c:
                        clean[k] = c
                    else:
                        clean.pop(k, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Hashable, Poly2]) -> "LinComb":
        x = cls.__new__(cls)
        x._terms = terms
        x._hash = None
        return x

    @classmethod
    def basis(cls, key, coeff=ONE) -> "LinComb":
        coeff = Poly2.coerce(coeff)
        return cls._raw({key: coeff} if coeff else {})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Hashable, object]]) -> "LinComb":
        acc: Dict[Hashable, Poly2] = {}
        for k, c in pairs:
            accumulate(acc, k, Poly2.coerce(c))
        return cls._raw(acc)

    # -- access ---------------------------------------------------------

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> Poly2:
        return self._terms.get(key, ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self):
        return iter(self._terms.items())

    def sorted_items(self, key: Optional[Callable] = None):
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else None)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(out, k, c)
        return LinComb._raw(out)

    def __neg__(self) -> "LinComb":
        return LinComb._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(out, k, -c)
        return LinComb._raw(out)

    def scale(self, s) -> "LinComb":
        s = Poly2.coerce(s)
        if not s:
            return LinComb()
        out = {}
        for k, c in self._terms.items():
            v = c * s
            if v:
                out[k] = v
        return LinComb._raw(out)

    def __mul__(self, s) -> "LinComb":
        if isinstance(s, (Poly2, int, Fraction)):
            return self.scale(s)
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, f: Callable[[Poly2], Poly2]) -> "LinComb":
        out = {}
        for k, c in self._terms.items():
            v = f(c)
            if v:
                out[k] = v
        return LinComb._raw(out)

    def specialize(self, set_h=None, set_hbar=None) -> "LinComb":
        return self.map_coeffs(lambda c: c.specialize(set_h, set_hbar))

    def div_h(self) -> "LinComb":
        return self.map_coeffs(Poly2.div_h)

    def div_hbar(self) -> "LinComb":
        return self.map_coeffs(Poly2.div_hbar)

    def map_keys(self, f: Callable) -> "LinComb":
        """Linear extension of ``f``, which sends a key to a key or to a LinComb."""
        out: Dict[Hashable, Poly2] = {}
        for k, c in self._terms.items():
            img = f(k)
            if isinstance(img, LinComb):
                for k2, c2 in img._terms.items():
                    accumulate(out, k2, c * c2)
            elif img is not None:
                accumulate(out, img, c)
        return LinComb._raw(out)

    def normalize(self) -> "LinComb":
        # storage is already normal; kept so callers can assert idempotence
        return LinComb(self._terms)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LinComb({dict(self._terms)!r})"


def accumulate(acc: Dict[Hashable, Poly2], key, coeff: Poly2) -> None:
    """In-place ``acc[key] += coeff`` dropping zeros."""
    if not coeff:
        return
    prev = acc.get(key)
    if prev is None:
        acc[key] = coeff
        return
    v = prev + coeff
    if v:
        acc[key] = v
    else:
        del acc[key]


def bilinear(x: LinComb, y: LinComb, f: Callable) -> LinComb:
    """Bilinear extension of ``f(key_x, key_y)`` returning a key, a LinComb, or None."""
    out: Dict[Hashable, Poly2] = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            img = f(kx, ky)
            if img is None:
                continue
            c = cx * cy
            if isinstance(img, LinComb):
                for k2, c2 in img.items():
                    accumulate(out, k2, c * c2)
            else:
                accumulate(out, img, c)
    return LinComb._raw(out)


def lincomb_add(x: LinComb, y: LinComb) -> LinComb:
    return x + y


def lincomb_scale(x: LinComb, s) -> LinComb:
    return x.scale(s)


def format_lincomb(x: LinComb, show: Callable[[object], str], sort_key: Optional[Callable] = None,
                   unit_key=None) -> str:
    """Render ``c * key + ...``; a unit coefficient is omitted, ``-1`` becomes a sign."""
    if x.is_zero():
        return "0"
    pieces = []
    for n, (k, c) in enumerate(x.sorted_items(sort_key)):
        body = show(k)
        neg = False
        if c.is_monomial():
            (_, lead), = c.terms()
            if lead < 0:
                neg, c = True, -c
            cs = "" if c == 1 else str(c)
        else:
            cs = f"({c})"
        if k == unit_key and unit_key is not None:
            term = cs or "1"
        else:
            term = f"{cs} * {body}" if cs else body
        if n == 0:
            pieces.append("-" + term if neg else term)
        else:
            pieces.append((" - " if neg else " + ") + term)
    return "".join(pieces)
