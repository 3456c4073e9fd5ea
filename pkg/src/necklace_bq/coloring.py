"""Colorings of links and the coproducts Δ^{n-1} of N(Q)_{h,hbar}.

A coloring is a matching I of edge occurrences with their reverses, plus a
color for every orbit of the traversal map f (which follows the knot, except
that at a matched edge it jumps to the successor of the partner) and for every
lone vertex.  The weight of a coloring depends only on the matching, so the
enumeration is organised matching by matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .heightlink import Link, make_link, normalize_link
from .necklace import Necklace, canonical, vertex_necklace
from .scalars import LinComb, Poly2, accumulate

Pos = Tuple[int, int]  # (knot index, position in knot)
Matching = Tuple[Tuple[Pos, Pos], ...]  # (Q-edge occurrence, Q*-edge occurrence) pairs


class ColoringInvariantError(AssertionError):
    pass


def enumerate_matchings(x: Link) -> List[Matching]:
    """All partial matchings of Q-edge occurrences with reversed Q*-edge occurrences."""
    plain: List[Pos] = []
    starred: Dict[int, List[Pos]] = {}
    for i, k in enumerate(x.knots):
        for j, (e, _) in enumerate(k):
            if e.starred:
                starred.setdefault(e.arrow, []).append((i, j))
            else:
                plain.append((i, j))
    out: List[Matching] = []

    def rec(n: int, used: frozenset, acc: List[Tuple[Pos, Pos]]):
        if n == len(plain):
            out.append(tuple(acc))
            return
        rec(n + 1, used, acc)
        p = plain[n]
        arrow = x.knots[p[0]][p[1]][0].arrow
        for s in starred.get(arrow, ()):
            if s not in used:
                acc.append((p, s))
                rec(n + 1, used | {s}, acc)
                acc.pop()

    rec(0, frozenset(), [])
    return out


@dataclass(frozen=True)
class Orbit:
    """One f-orbit: the surviving heighted edges in traversal order, or a vertex."""

    hedges: Tuple[Tuple, ...]
    vertex: int  # meaningful only when hedges is empty
    positions: Tuple[Pos, ...]

    def component(self):
        return self.hedges if self.hedges else self.vertex


def orbits(x: Link, m: Matching) -> List[Orbit]:
    """Orbits of f for the matching ``m``; cut edges contribute their source vertex."""
    phi: Dict[Pos, Pos] = {}
    for a, b in m:
        phi[a] = b
        phi[b] = a

    def f(p: Pos) -> Pos:
        q = phi.get(p, p)
        k = x.knots[q[0]]
        return (q[0], (q[1] + 1) % len(k))

    seen = set()
    out = []
    for i, k in enumerate(x.knots):
        for j in range(len(k)):
            if (i, j) in seen:
                continue
            p = (i, j)
            hedges, positions = [], []
            vertex = -1
            while p not in seen:
                seen.add(p)
                positions.append(p)
                he = x.knots[p[0]][p[1]]
                if p in phi:
                    vertex = he[0].src
                else:
                    hedges.append(he)
                p = f(p)
            out.append(Orbit(tuple(hedges), vertex, tuple(positions)))
    return out


@dataclass(frozen=True)
class MatchingData:
    matching: Matching
    orbits: Tuple[Orbit, ...]
    constraints: Tuple[Tuple[int, int], ...]  # (higher orbit, lower orbit): color(higher) > color(lower)
    weight: Poly2
    deg_h: int
    deg_hbar: int
    size: int = 0  # |c|, matched edges
    norm: int = 0  # ||c||
    negative: int = 0  # |c_-|, Q-edges above their partner


def _matching_data(x: Link, m: Matching) -> Optional[MatchingData]:
    orbs = orbits(x, m)
    where = {p: n for n, o in enumerate(orbs) for p in o.positions}
    cons = []
    negative = 0
    for a, b in m:
        ha, hb = x.knots[a[0]][a[1]][1], x.knots[b[0]][b[1]][1]
        hi, lo = (a, b) if ha > hb else (b, a)
        if where[hi] == where[lo]:
            return None  # strict inequality c > c impossible
        cons.append((where[hi], where[lo]))
        if ha > hb:
            negative += 1  # the Q-edge sits above its partner
    size = 2 * len(m)  # |c|
    norm = len(x.knots) - len(orbs)  # ||c||: lone vertices cancel
    if (size // 2 + norm) % 2 or (size // 2 - norm) % 2:
        raise ColoringInvariantError(f"non-integer weight exponent for |c|={size}, ||c||={norm}")
    dh, dhb = (size // 2 + norm) // 2, (size // 2 - norm) // 2
    if dh < 0 or dhb < 0:
        raise ColoringInvariantError(f"negative weight exponent for |c|={size}, ||c||={norm}")
    weight = Poly2.monomial(-1 if negative % 2 else 1, dh, dhb)
    return MatchingData(m, tuple(orbs), tuple(cons), weight, dh, dhb, size, norm, negative)


@lru_cache(maxsize=50_000)
def matching_data(x: Link) -> Tuple[MatchingData, ...]:
    out = []
    for m in enumerate_matchings(x):
        d = _matching_data(x, m)
        if d is not None:
            out.append(d)
    return tuple(out)


def _orbit_colorings(n_orbits: int, cons: Sequence[Tuple[int, int]], n: int) -> Iterator[Tuple[int, ...]]:
    """Assignments orbit -> {1..n} with color[hi] > color[lo] for every constraint."""
    colors = [0] * n_orbits

    def ok(i: int) -> bool:
        for hi, lo in cons:
            if hi <= i and lo <= i and colors[hi] <= colors[lo]:
                if hi == i or lo == i:
                    return False
        return True

    def rec(i: int):
        if i == n_orbits:
            yield tuple(colors)
            return
        for c in range(1, n + 1):
            colors[i] = c
            if ok(i):
                yield from rec(i + 1)
        colors[i] = 0

    yield from rec(0)


@dataclass(frozen=True)
class Coloring:
    matching: Matching
    orbit_colors: Tuple[int, ...]
    vertex_colors: Tuple[int, ...]
    n: int


@dataclass(frozen=True)
class ColoredSplit:
    weight: Poly2
    parts: Tuple[Link, ...]


def enumerate_colorings(x: Link, n: int) -> List[Coloring]:
    out = []
    for d in matching_data(x):
        for oc in _orbit_colorings(len(d.orbits), d.constraints, n):
            for vc in product(range(1, n + 1), repeat=len(x.vertices)):
                out.append(Coloring(d.matching, oc, vc, n))
    return out


def _parts(x: Link, orbs: Sequence[Orbit], oc: Sequence[int], vc: Sequence[int], n: int) -> Tuple[Link, ...]:
    knots: List[List] = [[] for _ in range(n)]
    verts: List[List[int]] = [[] for _ in range(n)]
    for o, c in zip(orbs, oc):
        if o.hedges:
            knots[c - 1].append(o.hedges)
        else:
            verts[c - 1].append(o.vertex)
    for v, c in zip(x.vertices, vc):
        verts[c - 1].append(v)
    return tuple(make_link(knots[t], verts[t], check=False) for t in range(n))


def split(x: Link, c: Coloring) -> ColoredSplit:
    for d in matching_data(x):
        if d.matching == c.matching:
            return ColoredSplit(d.weight, _parts(x, d.orbits, c.orbit_colors, c.vertex_colors, c.n))
    raise ValueError("coloring does not belong to this link")


@lru_cache(maxsize=50_000)
def coproduct_raw(x: Link, n: int) -> LinComb:
    """Δ^{n-1}(x) with unnormalized tensor factors, keyed by n-tuples of links."""
    acc: Dict[Tuple[Link, ...], Poly2] = {}
    if n == 0:
        if x.is_unit():
            accumulate(acc, (), Poly2.const(1))
        return LinComb._raw(acc)
    for d in matching_data(x):
        for oc in _orbit_colorings(len(d.orbits), d.constraints, n):
            for vc in product(range(1, n + 1), repeat=len(x.vertices)):
                accumulate(acc, _parts(x, d.orbits, oc, vc, n), d.weight)
    return LinComb._raw(acc)


def normalize_tensor(x: LinComb) -> LinComb:
    """Normalize every tensor factor of a tuple-keyed element."""
    out: Dict = {}
    for parts, c in x.items():
        expanded = [((), c)]
        for p in parts:
            nf = normalize_link(p)
            expanded = [(keys + (k,), cc * c2) for keys, cc in expanded for k, c2 in nf.items()]
        for keys, cc in expanded:
            accumulate(out, keys, cc)
    return LinComb._raw(out)


@lru_cache(maxsize=50_000)
def _coproduct_link(x: Link, n: int) -> LinComb:
    return normalize_tensor(coproduct_raw(x, n))


def coproduct(x: LinComb, n: int = 2) -> LinComb:
    """Δ^{n-1} on an element of N(Q)_{h,hbar}; factors are normalized."""
    return x.map_keys(lambda k: _coproduct_link(k, n))


def tensor_product_N(x: LinComb, y: LinComb) -> LinComb:
    """Product in N^{⊗n}: factorwise place-above then normalize."""
    from .heightlink import link_product

    out: Dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            expanded = [((), cx * cy)]
            for a, b in zip(kx, ky):
                nf = normalize_link(link_product(a, b))
                expanded = [(keys + (k,), cc * c2) for keys, cc in expanded for k, c2 in nf.items()]
            for keys, cc in expanded:
                accumulate(out, keys, cc)
    return LinComb._raw(out)


def apply_at(x: LinComb, slot: int, f) -> LinComb:
    """Apply a LinComb-of-tuples valued map ``f`` to factor ``slot`` and splice the result in."""
    out: Dict = {}
    for key, c in x.items():
        for sub, c2 in f(key[slot]).items():
            accumulate(out, key[:slot] + tuple(sub) + key[slot + 1:], c * c2)
    return LinComb._raw(out)


def permute_pairs(x: LinComb) -> LinComb:
    return x.map_keys(lambda k: (k[1], k[0]))


# ---------------------------------------------------------------------------
# restricted colorings feeding the quantization map


@lru_cache(maxsize=50_000)
def single_component_terms(x: Link) -> LinComb:
    """Σ over colorings with one component per color and no h in the weight.

    These are exactly the colorings that survive q^{⊗n} after h ↦ 0; the
    result is keyed by tuples of necklaces, with hbar-only coefficients.
    """
    acc: Dict[Tuple[Necklace, ...], Poly2] = {}
    if x.is_unit():
        accumulate(acc, (), Poly2.const(1))
        return LinComb._raw(acc)
    for d in matching_data(x):
        if d.deg_h:
            continue
        comps: List[Necklace] = []
        for o in d.orbits:
            comps.append(canonical([e for e, _ in o.hedges]) if o.hedges else vertex_necklace(o.vertex))
        n_orb = len(comps)
        comps += [vertex_necklace(v) for v in x.vertices]
        n = len(comps)
        for oc in _bijective_colorings(n_orb, d.constraints, n):
            used = set(oc)
            free = [c for c in range(1, n + 1) if c not in used]
            for perm in permutations(free):
                word: List[Optional[Necklace]] = [None] * n
                for o, c in enumerate(oc):
                    word[c - 1] = comps[o]
                for v, c in enumerate(perm):
                    word[c - 1] = comps[n_orb + v]
                accumulate(acc, tuple(word), d.weight)
    return LinComb._raw(acc)


def _bijective_colorings(n_orbits: int, cons, n: int):
    """Injective orbit colorings into {1..n} honouring the constraints."""
    colors = [0] * n_orbits
    used = [False] * (n + 1)

    def rec(i: int):
        if i == n_orbits:
            yield tuple(colors)
            return
        for c in range(1, n + 1):
            if used[c]:
                continue
            colors[i] = c
            good = True
            for hi, lo in cons:
                if (hi == i and lo < i and c <= colors[lo]) or (lo == i and hi < i and colors[hi] <= c):
                    good = False
                    break
            if good:
                used[c] = True
                yield from rec(i + 1)
                used[c] = False
        colors[i] = 0

    yield from rec(0)
