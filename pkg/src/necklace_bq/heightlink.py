"""Height-labelled links and the skein-relation algebra N(Q)_{h,hbar}.

A link is a symmetric product of knots (cyclic words whose edges carry
pairwise distinct heights) and lone vertices.  Links are stored compressed
(heights 1..N), each knot rotated to start at its lowest edge, knots sorted by
their lowest height and vertices sorted; two links are equal iff they are
equal as tuples.

Elements of N(Q)_{h,hbar} are ``LinComb`` over standard links: knots sorted by
necklace, heights 1..N assigned in reading order, each knot read from its
canonical rotation.  :func:`normalize` rewrites arbitrary links into that
form with the two skein relations.
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .necklace import Necklace, canonical, rotation_offsets, vertex_necklace
from .quiver import Edge, Quiver, pairing
from .scalars import H, HBAR, ONE, LinComb, Poly2, accumulate, bilinear, format_lincomb

HEdge = Tuple[Edge, int]
Knot = Tuple[HEdge, ...]


class LinkError(ValueError):
    pass


class Link(NamedTuple):
    knots: Tuple[Knot, ...]
    vertices: Tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(len(k) for k in self.knots)

    @property
    def component_count(self) -> int:
        return len(self.knots) + len(self.vertices)

    def is_unit(self) -> bool:
        return not self.knots and not self.vertices


UNIT = Link((), ())


def _rotate_to_min(hedges: Sequence[HEdge]) -> Knot:
    m = min(range(len(hedges)), key=lambda i: hedges[i][1])
    return tuple(hedges[m:]) + tuple(hedges[:m])


def make_link(knots: Iterable[Sequence[HEdge]], vertices: Iterable[int] = (), check: bool = True) -> Link:
    """Build a compressed link from knots with distinct heights."""
    knots = [list(k) for k in knots]
    if check:
        for k in knots:
            if not k:
                raise LinkError("empty knot")
            n = len(k)
            for i in range(n):
                if k[i][0].tgt != k[(i + 1) % n][0].src:
                    raise LinkError("knot is not a composable cycle")
    heights = sorted(h for k in knots for _, h in k)
    if check and len(set(heights)) != len(heights):
        raise LinkError("duplicate heights in link")
    if check and any(h < 1 for h in heights):
        raise LinkError("heights must be positive")
    rank = {h: i + 1 for i, h in enumerate(heights)}
    out = [_rotate_to_min([(e, rank[h]) for e, h in k]) for k in knots]
    out.sort(key=lambda k: k[0][1])
    return Link(tuple(out), tuple(sorted(vertices)))


def compress_heights(x: Link) -> Link:
    return make_link(x.knots, x.vertices)


def knot(*hedges: HEdge) -> Link:
    return make_link([hedges])


def link_product(x: Link, y: Link) -> Link:
    """Place ``y`` above ``x``."""
    shift = x.edge_count
    knots = list(x.knots) + [tuple((e, h + shift) for e, h in k) for k in y.knots]
    return make_link(knots, x.vertices + y.vertices, check=False)


def link_necklaces(x: Link) -> List[Necklace]:
    """Underlying necklaces: knots in stored order, then vertices."""
    return [canonical([e for e, _ in k]) for k in x.knots] + [vertex_necklace(v) for v in x.vertices]


def lift(necklaces: Sequence[Necklace]) -> Link:
    """Product of the canonical lifts (a1,1)(a2,2)...(ak,k), in the given order."""
    out = UNIT
    vertices = []
    for n in necklaces:
        if n.is_vertex:
            vertices.append(n.vertex)
        else:
            out = link_product(out, make_link([[(e, i + 1) for i, e in enumerate(n.edges)]], check=False))
    return make_link(out.knots, out.vertices + tuple(vertices), check=False)


# ---------------------------------------------------------------------------
# standard form


def _standard_plan(x: Link, rng: Optional[random.Random] = None):
    """Choose the target standard link: knot order and reading start per knot.

    Returns ``(order, starts)`` where ``order`` lists knot indices and
    ``starts[i]`` is the reading offset of knot i.  Ties (equal necklaces,
    rotationally symmetric words) are broken by current heights, or at random
    when ``rng`` is given.
    """
    keys = []
    starts = []
    for i, k in enumerate(x.knots):
        edges = tuple(e for e, _ in k)
        offs = rotation_offsets(edges)
        if rng is None:
            r = min(offs, key=lambda o: k[o][1])
        else:
            r = rng.choice(offs)
        starts.append(r)
        tie = rng.random() if rng is not None else k[r][1]
        keys.append((canonical(edges), tie, i))
    order = [i for *_, i in sorted(keys)]
    return order, starts


def _ranks(x: Link, order, starts) -> Dict[Tuple[int, int], int]:
    rank = {}
    base = 0
    for i in order:
        k = x.knots[i]
        n = len(k)
        for t in range(n):
            rank[(i, (starts[i] + t) % n)] = base + t + 1
        base += n
    return rank


def standard_form(x: Link) -> Link:
    """The standard link with the same knots and vertices (heights reassigned)."""
    order, starts = _standard_plan(x)
    knots = []
    base = 0
    for i in order:
        k = x.knots[i]
        n = len(k)
        knots.append(tuple((k[(starts[i] + t) % n][0], base + t + 1) for t in range(n)))
        base += n
    return Link(tuple(knots), x.vertices)


def is_standard(x: Link) -> bool:
    return standard_form(x) == x


def _cyc(k: Sequence[HEdge], start: int, stop: int) -> List[HEdge]:
    """Entries from index ``start`` forward (cyclically) up to, not including, ``stop``."""
    n = len(k)
    out = []
    i = start % n
    while i != stop % n:
        out.append(k[i])
        i = (i + 1) % n
    return out


def _correction(knots: List[List[HEdge]], vertices: Tuple[int, ...], lo: Tuple[int, int],
                hi: Tuple[int, int], h_param: Poly2 = H) -> Tuple[Poly2, Link]:
    """The X'' term of the skein relation for the edges at ``lo`` (lower) and ``hi``."""
    (k1, p1), (k2, p2) = lo, hi
    e1, e2 = knots[k1][p1][0], knots[k2][p2][0]
    sign = pairing(e1, e2)
    if not sign:
        return Poly2(), UNIT
    others = [k for i, k in enumerate(knots) if i not in (k1, k2)]
    new_vertices = list(vertices)
    if k1 != k2:
        a, b = knots[k1], knots[k2]
        joined = _cyc(a, p1 + 1, p1) + _cyc(b, p2 + 1, p2)
        if joined:
            others.append(joined)
        else:
            new_vertices.append(e1.tgt)
        coeff = h_param * sign
    else:
        k = knots[k1]
        first = _cyc(k, p2 + 1, p1)
        second = _cyc(k, p1 + 1, p2)
        for arc, v in ((first, e2.tgt), (second, e1.tgt)):
            if arc:
                others.append(arc)
            else:
                new_vertices.append(v)
        coeff = HBAR * sign
    return coeff, make_link(others, new_vertices, check=False)


def skein_swap(x: Link, height: int) -> List[Tuple[Poly2, Link]]:
    """Expand ``x`` along the swap of heights ``height`` and ``height + 1``.

    Returns ``[(1, X'), (param * <e1,e2>, X'')]`` with the second entry omitted
    when the pairing vanishes; ``e1`` is the edge at the lower height.
    """
    pos = {h: (i, j) for i, k in enumerate(x.knots) for j, (_, h) in enumerate(k)}
    if height not in pos or height + 1 not in pos:
        raise LinkError(f"heights {height} and {height + 1} are not both present")
    lo, hi = pos[height], pos[height + 1]
    knots = [list(k) for k in x.knots]
    coeff, corr = _correction(knots, x.vertices, lo, hi)
    knots[lo[0]][lo[1]] = (knots[lo[0]][lo[1]][0], height + 1)
    knots[hi[0]][hi[1]] = (knots[hi[0]][hi[1]][0], height)
    out = [(ONE, make_link(knots, x.vertices, check=False))]
    if coeff:
        out.append((coeff, corr))
    return out


def _rewrite(x: Link, recurse, rng: Optional[random.Random] = None, h_param: Poly2 = H) -> LinComb:
    """Bubble ``x`` toward its standard form, expanding corrections via ``recurse``."""
    order, starts = _standard_plan(x, rng)
    rank = _ranks(x, order, starts)
    knots = [list(k) for k in x.knots]
    at = {h: (i, j) for i, k in enumerate(knots) for j, (_, h) in enumerate(k)}
    n_edges = len(at)
    acc: Dict[Link, Poly2] = {}
    while True:
        inverted = [h for h in range(1, n_edges) if rank[at[h]] > rank[at[h + 1]]]
        if not inverted:
            break
        h = rng.choice(inverted) if rng is not None else inverted[0]
        lo, hi = at[h], at[h + 1]
        coeff, corr = _correction(knots, x.vertices, lo, hi, h_param)
        if coeff:
            for key, c in recurse(corr).items():
                accumulate(acc, key, coeff * c)
        knots[lo[0]][lo[1]] = (knots[lo[0]][lo[1]][0], h + 1)
        knots[hi[0]][hi[1]] = (knots[hi[0]][hi[1]][0], h)
        at[h], at[h + 1] = hi, lo
    final = make_link(knots, x.vertices, check=False)
    accumulate(acc, final, ONE)
    return LinComb._raw(acc)


@lru_cache(maxsize=200_000)
def normalize_link(x: Link) -> LinComb:
    """Normal form of a single (compressed) link."""
    return _rewrite(x, normalize_link)


@lru_cache(maxsize=100_000)
def normalize_link_h1(x: Link) -> LinComb:
    """Normal form in the specialization h = 1, computed with h = 1 throughout."""
    return _rewrite(x, normalize_link_h1, h_param=ONE)


def normalize_link_random(x: Link, rng: random.Random) -> LinComb:
    """Normal form computed along a random reduction schedule (for confluence checks)."""
    memo: Dict[Link, LinComb] = {}

    def rec(y: Link) -> LinComb:
        if y not in memo:
            memo[y] = _rewrite(y, rec, rng)
        return memo[y]

    return rec(x)


def normalize(x: LinComb) -> LinComb:
    """Rewrite a combination of arbitrary links into standard links."""
    return x.map_keys(lambda k: normalize_link(compress_heights(k)))


def element(x: Link, coeff=ONE) -> LinComb:
    """The normalized element of N(Q)_{h,hbar} represented by a single link."""
    return normalize_link(compress_heights(x)).scale(coeff)


def n_product(x: LinComb, y: LinComb) -> LinComb:
    """Product of N(Q)_{h,hbar}: bilinear ``link_product`` then normalization."""
    return bilinear(x, y, lambda a, b: normalize_link(link_product(a, b)))


def unit() -> LinComb:
    return LinComb.basis(UNIT)


def reduce_mod_hbar(x: LinComb) -> LinComb:
    """Normal form with every hbar-divisible term dropped."""
    return normalize(x).specialize(set_hbar=0)


def reduce_mod_h(x: LinComb) -> LinComb:
    return normalize(x).specialize(set_h=0)


# ---------------------------------------------------------------------------
# text form


def link_str(q: Quiver, x: Link) -> str:
    if x.is_unit():
        return "1"
    parts = ["".join(f"({q.edge_name(e)},{h})" for e, h in k) for k in x.knots]
    parts += [f"[{q.vertex_name(v)}]" for v in x.vertices]
    return " & ".join(parts)


def link_sort_key(x: Link):
    return (x.edge_count, x.component_count, x)


def format_N(q: Quiver, x: LinComb) -> str:
    return format_lincomb(x, lambda k: link_str(q, k), sort_key=link_sort_key, unit_key=UNIT)


_HEDGE = re.compile(r"\(\s*([A-Za-z_][A-Za-z0-9_]*\*?)\s*,\s*(\d+)\s*\)")


def parse_link(q: Quiver, text: str) -> Link:
    """Parse ``(a,1)(a*,2) & (b*,3)(b,4) & [v1]``; ``1`` is the empty link."""
    text = text.strip()
    if text == "1":
        return UNIT
    knots, vertices = [], []
    for comp in text.split("&"):
        comp = comp.strip()
        if comp.startswith("[") and comp.endswith("]"):
            try:
                vertices.append(q.vertex(comp[1:-1].strip()))
            except KeyError as exc:
                raise LinkError(str(exc)) from None
            continue
        pos, hedges = 0, []
        while pos < len(comp):
            m = _HEDGE.match(comp, pos)
            if not m:
                raise LinkError(f"bad link component {comp!r} at offset {pos}")
            try:
                hedges.append((q.parse_edge(m.group(1)), int(m.group(2))))
            except KeyError as exc:
                raise LinkError(str(exc)) from None
            pos = m.end()
            while pos < len(comp) and comp[pos].isspace():
                pos += 1
        if not hedges:
            raise LinkError("empty link component")
        knots.append(hedges)
    return make_link(knots, vertices)
