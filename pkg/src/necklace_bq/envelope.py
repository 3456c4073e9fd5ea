"""The h-deformed enveloping algebra V_h(L_h) = T(L_h)/(ab − ba − h[a,b]).

Elements are ``LinComb`` over words of necklaces.  Normal-form words are
sorted non-decreasingly in the PBW order, which is plain ``Necklace`` tuple
order (length, then canonical edges, vertices first).
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Dict, Optional, Tuple

from .necklace import Necklace, bracket_basis, cobracket_basis, necklace_str, parse_necklace
from .quiver import Quiver
from .scalars import H, LinComb, Poly2, accumulate, bilinear, format_lincomb

UEWord = Tuple[Necklace, ...]


def _first_descent(w: UEWord) -> int:
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            return i
    return -1


def _rewrite_once(w: UEWord, i: int):
    """βα → αβ + h{β,α} at position i; returns [(coeff, word)]."""
    b, a = w[i], w[i + 1]
    out = [(Poly2.const(1), w[:i] + (a, b) + w[i + 2:])]
    for n, c in bracket_basis(b, a).items():
        out.append((H * c, w[:i] + (n,) + w[i + 2:]))
    return out


@lru_cache(maxsize=200_000)
def pbw_word(w: UEWord) -> LinComb:
    i = _first_descent(w)
    if i < 0:
        return LinComb.basis(w)
    acc: Dict[UEWord, Poly2] = {}
    for c, w2 in _rewrite_once(w, i):
        for k, c2 in pbw_word(w2).items():
            accumulate(acc, k, c * c2)
    return LinComb._raw(acc)


def pbw_word_random(w: UEWord, rng: random.Random) -> LinComb:
    """Normal form along a random choice of out-of-order pair at every step."""
    descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
    if not descents:
        return LinComb.basis(w)
    acc: Dict[UEWord, Poly2] = {}
    for c, w2 in _rewrite_once(w, rng.choice(descents)):
        for k, c2 in pbw_word_random(w2, rng).items():
            accumulate(acc, k, c * c2)
    return LinComb._raw(acc)


def pbw_word_by(w: UEWord, key) -> LinComb:
    """Normal form for the alternative total order given by ``key``.

    Used to check that nothing observable depends on the chosen PBW order.
    """
    memo: Dict[UEWord, LinComb] = {}

    def rec(u: UEWord) -> LinComb:
        if u in memo:
            return memo[u]
        ks = [key(n) for n in u]
        i = next((j for j in range(len(u) - 1) if ks[j] > ks[j + 1]), -1)
        if i < 0:
            res = LinComb.basis(u)
        else:
            acc: Dict[UEWord, Poly2] = {}
            for c, w2 in _rewrite_once(u, i):
                for k, c2 in rec(w2).items():
                    accumulate(acc, k, c * c2)
            res = LinComb._raw(acc)
        memo[u] = res
        return res

    return rec(w)


def pbw_normalize(x: LinComb, rng: Optional[random.Random] = None) -> LinComb:
    if rng is None:
        return x.map_keys(pbw_word)
    return x.map_keys(lambda w: pbw_word_random(w, rng))


def v_product(x: LinComb, y: LinComb) -> LinComb:
    return bilinear(x, y, lambda a, b: pbw_word(a + b))


def generator(n: Necklace) -> LinComb:
    return LinComb.basis((n,))


def _pair_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product in V⊗V."""
    out: Dict = {}
    for (x1, x2), c in x.items():
        for (y1, y2), d in y.items():
            cd = c * d
            for k1, c1 in pbw_word(x1 + y1).items():
                for k2, c2 in pbw_word(x2 + y2).items():
                    accumulate(out, (k1, k2), cd * c1 * c2)
    return LinComb._raw(out)


@lru_cache(maxsize=100_000)
def _delta_word(w: UEWord) -> LinComb:
    acc: Dict = {}
    idx = range(len(w))
    for r in range(len(w) + 1):
        for chosen in combinations(idx, r):
            left = tuple(w[i] for i in chosen)
            right = tuple(w[i] for i in idx if i not in chosen)
            for k1, c1 in pbw_word(left).items():
                for k2, c2 in pbw_word(right).items():
                    accumulate(acc, (k1, k2), c1 * c2)
    return LinComb._raw(acc)


def v_delta(x: LinComb) -> LinComb:
    """Coproduct with primitive generators, extended multiplicatively."""
    return x.map_keys(_delta_word)


@lru_cache(maxsize=100_000)
def _cobracket_word(w: UEWord) -> LinComb:
    if not w:
        return LinComb()
    head = cobracket_basis(w[0]).map_keys(lambda k: ((k[0],), (k[1],)))
    rest = w[1:]
    first = _pair_mul(head, _delta_word(rest))
    second = _pair_mul(_delta_word(w[:1]), _cobracket_word(rest))
    return first + second


def v_cobracket(x: LinComb) -> LinComb:
    """Cobracket on V_h: the necklace cobracket extended by ν(ab) = ν(a)Δ(b) + Δ(a)ν(b)."""
    return x.map_keys(_cobracket_word)


def q_hbar_map(x: LinComb) -> LinComb:
    """h ↦ 0, words become symmetric monomials in S(L)."""
    return x.specialize(set_h=0).map_keys(lambda w: tuple(sorted(w)))


def ue_word_str(q: Quiver, w: UEWord) -> str:
    if not w:
        return "1"
    return " · ".join(necklace_str(q, n) for n in w)


def format_V(q: Quiver, x: LinComb) -> str:
    return format_lincomb(x, lambda w: ue_word_str(q, w), sort_key=lambda w: (len(w), w), unit_key=())


def parse_ue_word(q: Quiver, text: str) -> UEWord:
    text = text.strip()
    if text == "1":
        return ()
    return tuple(parse_necklace(q, part) for part in text.split("·"))
