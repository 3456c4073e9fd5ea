"""The tensor bialgebra F(L_hbar): shuffle product, deconcatenation, Poisson bracket,
the subspace E(L_hbar) and the symmetrization onto S(L_hbar).

Elements are ``LinComb`` over tensor words (tuples of necklaces, ``()`` is the
unit) with coefficients free of h.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, Tuple

from .necklace import Necklace, bracket_basis, cobracket_basis, necklace_str
from .quiver import Quiver
from .scalars import HBAR, LinComb, Poly2, accumulate, bilinear, format_lincomb

TensorWord = Tuple[Necklace, ...]


class CoefficientError(ValueError):
    pass


def check_F(x: LinComb) -> LinComb:
    """Reject elements whose coefficients involve h; F lives over k[hbar]."""
    for _, c in x.items():
        if c.degree_h() > 0:
            raise CoefficientError(f"coefficient {c} depends on h")
    return x


def word(*necklaces: Necklace) -> LinComb:
    return LinComb.basis(tuple(necklaces))


@lru_cache(maxsize=100_000)
def _shuffle_words(a: TensorWord, b: TensorWord) -> LinComb:
    m, n = len(a), len(b)
    acc: Dict[TensorWord, Poly2] = {}
    one = Poly2.const(1)
    for slots in combinations(range(m + n), m):
        out = []
        ia = ib = 0
        chosen = set(slots)
        for p in range(m + n):
            if p in chosen:
                out.append(a[ia])
                ia += 1
            else:
                out.append(b[ib])
                ib += 1
        accumulate(acc, tuple(out), one)
    return LinComb._raw(acc)


def shuffle(x: LinComb, y: LinComb) -> LinComb:
    return bilinear(x, y, _shuffle_words)


def diag(x: LinComb) -> LinComb:
    """Deconcatenation coproduct, keyed by pairs of words."""
    out: Dict = {}
    for w, c in x.items():
        for i in range(len(w) + 1):
            accumulate(out, (w[:i], w[i:]), c)
    return LinComb._raw(out)


@lru_cache(maxsize=100_000)
def _f_bracket_words(a: TensorWord, b: TensorWord) -> LinComb:
    acc: Dict[TensorWord, Poly2] = {}
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            mid = bracket_basis(ai, bj)
            if not mid:
                continue
            left = _shuffle_words(a[:i], b[:j])
            right = _shuffle_words(a[i + 1:], b[j + 1:])
            for wl, cl in left.items():
                for n, cm in mid.items():
                    for wr, cr in right.items():
                        accumulate(acc, wl + (n,) + wr, cl * cm * cr)
    return LinComb._raw(acc)


def f_bracket(x: LinComb, y: LinComb) -> LinComb:
    """Poisson bracket of F extending the necklace bracket."""
    return bilinear(x, y, _f_bracket_words)


def sigma(x: LinComb, i: int) -> LinComb:
    """Swap factors i and i+1 (1-based) of every word long enough."""
    def f(w):
        return w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:]
    return x.map_keys(f)


def nu_at(x: LinComb, i: int) -> LinComb:
    """Apply the necklace cobracket at factor i (1-based)."""
    out: Dict = {}
    for w, c in x.items():
        for (l, r), c2 in cobracket_basis(w[i - 1]).items():
            accumulate(out, w[:i - 1] + (l, r) + w[i:], c * c2)
    return LinComb._raw(out)


def grade(x: LinComb, n: int) -> LinComb:
    return LinComb._raw({w: c for w, c in x.items() if len(w) == n})


def E_defects(x: LinComb):
    """Yield ``(n, i, defect)`` for every relation of E that fails on ``x``."""
    top = max((len(w) for w, _ in x.items()), default=0)
    for n in range(2, top + 2):
        xn, xprev = grade(x, n), grade(x, n - 1)
        for i in range(1, n):
            defect = xn - sigma(xn, i) - nu_at(xprev, i).scale(HBAR)
            if defect:
                yield n, i, defect


def is_in_E(x: LinComb) -> bool:
    """Whether ⁿa − σ_i(ⁿa) = hbar ν_i(ⁿ⁻¹a) for all n > i ≥ 1."""
    return next(E_defects(x), None) is None


def symm(x: LinComb) -> LinComb:
    """a₁⋯a_m ↦ (1/m!) a₁·…·a_m in S(L_hbar)."""
    out: Dict = {}
    for w, c in x.items():
        accumulate(out, tuple(sorted(w)), c * Poly2.const(Fraction(1, factorial(len(w)))))
    return LinComb._raw(out)


def word_str(q: Quiver, w: TensorWord) -> str:
    if not w:
        return "1"
    return " ⊗ ".join(necklace_str(q, n) for n in w)


def format_F(q: Quiver, x: LinComb) -> str:
    return format_lincomb(x, lambda w: word_str(q, w), sort_key=lambda w: (len(w), w), unit_key=())


def parse_word(q: Quiver, text: str) -> TensorWord:
    from .necklace import parse_necklace

    text = text.strip()
    if text == "1":
        return ()
    return tuple(parse_necklace(q, part) for part in text.split("⊗"))
