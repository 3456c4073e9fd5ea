"""Necklaces, the necklace Lie bialgebra L, and the induced structures on S(L).

A necklace is a cyclic word in the double quiver up to rotation, or a lone
vertex.  Elements of L are ``LinComb`` over :class:`Necklace`; elements of
S(L) are ``LinComb`` over sorted tuples of necklaces (symmetric monomials);
elements of L⊗L or S(L)⊗S(L) are ``LinComb`` over pairs of such keys.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .quiver import Edge, Quiver, pairing
from .scalars import LinComb, Poly2, accumulate, bilinear, format_lincomb


class NecklaceError(ValueError):
    pass


class Necklace(NamedTuple):
    """Canonical necklace.

    Field order makes plain tuple comparison the PBW order: shorter first
    (vertices have length 0), then the canonical edge sequence; ``vertex`` is
    the vertex index for a vertex necklace and -1 for a cycle.
    """

    length: int
    edges: Tuple[Edge, ...]
    vertex: int

    @property
    def is_vertex(self) -> bool:
        return self.length == 0


SymMonomial = Tuple[Necklace, ...]  # sorted; () is the unit of S(L)


def vertex_necklace(v: int) -> Necklace:
    return Necklace(0, (), v)


def is_composable_cycle(edges: Sequence[Edge]) -> bool:
    n = len(edges)
    return n > 0 and all(edges[i].tgt == edges[(i + 1) % n].src for i in range(n))


def _min_rotation(edges: Tuple[Edge, ...]) -> Tuple[Edge, ...]:
    # desk-scale words; brute force beats Booth's algorithm in clarity
    return min(edges[i:] + edges[:i] for i in range(len(edges)))


@lru_cache(maxsize=None)
def _canonical_cached(edges: Tuple[Edge, ...]) -> Necklace:
    return Necklace(len(edges), _min_rotation(edges), -1)


def canonical(edges: Sequence[Edge]) -> Necklace:
    """Minimal-rotation representative of a composable cyclic edge list."""
    edges = tuple(edges)
    if not is_composable_cycle(edges):
        raise NecklaceError("edge sequence is not a composable cycle")
    return _canonical_cached(edges)


def close_arc(arc: Tuple[Edge, ...], vertex: int) -> Necklace:
    """Necklace of a closed arc; the empty arc is the vertex it sits at."""
    if not arc:
        return vertex_necklace(vertex)
    return _canonical_cached(arc)


def rotation_offsets(edges: Tuple[Edge, ...]) -> List[int]:
    """All offsets r with edges[r:]+edges[:r] equal to the canonical rotation."""
    best = _min_rotation(edges)
    return [r for r in range(len(edges)) if edges[r:] + edges[:r] == best]


# ---------------------------------------------------------------------------
# bracket and cobracket on basis necklaces


@lru_cache(maxsize=None)
def bracket_basis(x: Necklace, y: Necklace) -> LinComb:
    if x.is_vertex or y.is_vertex:
        return LinComb()
    a, b = x.edges, y.edges
    acc: Dict[Necklace, Poly2] = {}
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            p = pairing(ai, bj)
            if p:
                word = a[i + 1:] + a[:i] + b[j + 1:] + b[:j]
                accumulate(acc, close_arc(word, ai.tgt), Poly2.const(p))
    return LinComb._raw(acc)


def bracket(x: LinComb, y: LinComb) -> LinComb:
    """Necklace Lie bracket, bilinear over the coefficient ring."""
    return bilinear(x, y, bracket_basis)


@lru_cache(maxsize=None)
def cobracket_basis(x: Necklace) -> LinComb:
    if x.is_vertex:
        return LinComb()
    a = x.edges
    k = len(a)
    acc: Dict[Tuple[Necklace, Necklace], Poly2] = {}
    for i in range(k):
        for j in range(i + 1, k):
            p = pairing(a[i], a[j])
            if not p:
                continue
            left = close_arc(a[j + 1:] + a[:i], a[j].tgt)
            right = close_arc(a[i + 1:j], a[i].tgt)
            accumulate(acc, (left, right), Poly2.const(p))
            accumulate(acc, (right, left), Poly2.const(-p))
    return LinComb._raw(acc)


def cobracket(x: LinComb) -> LinComb:
    """Necklace Lie cobracket into L⊗L, keyed by ordered pairs."""
    return x.map_keys(cobracket_basis)


def as_element(*necklaces: Necklace) -> LinComb:
    return LinComb.from_pairs((n, 1) for n in necklaces)


# ---------------------------------------------------------------------------
# tensor helpers shared with the other modules


def tensor(x: LinComb, y: LinComb) -> LinComb:
    """x ⊗ y with pair keys."""
    return bilinear(x, y, lambda a, b: (a, b))


def perm(x: LinComb) -> LinComb:
    """Swap the two factors of a pair-keyed element."""
    return x.map_keys(lambda k: (k[1], k[0]))


def apply_pairwise(x: LinComb, f, g) -> LinComb:
    """(f ⊗ g)(x) for linear maps given on basis keys as LinComb-valued functions."""
    out: Dict = {}
    for (k1, k2), c in x.items():
        for (k3, k4), c2 in tensor(f(k1), g(k2)).items():
            accumulate(out, (k3, k4), c * c2)
    return LinComb._raw(out)


def cyclic3(x: LinComb) -> LinComb:
    """τ: a⊗b⊗c ↦ c⊗a⊗b on triple keys."""
    return x.map_keys(lambda k: (k[2], k[0], k[1]))


def id_tensor_cobracket(x: LinComb) -> LinComb:
    """(id ⊗ ν) applied to a pair-keyed element of L⊗L, giving triple keys."""
    out: Dict = {}
    for (a, b), c in x.items():
        for (b1, b2), c2 in cobracket_basis(b).items():
            accumulate(out, (a, b1, b2), c * c2)
    return LinComb._raw(out)


def act_left(a: LinComb, t: LinComb) -> LinComb:
    """a·(x⊗y) = [a,x]⊗y + x⊗[a,y]."""
    out: Dict = {}
    for (x, y), c in t.items():
        for k, c2 in bracket(a, LinComb.basis(x)).items():
            accumulate(out, (k, y), c * c2)
        for k, c2 in bracket(a, LinComb.basis(y)).items():
            accumulate(out, (x, k), c * c2)
    return LinComb._raw(out)


def act_right(t: LinComb, b: LinComb) -> LinComb:
    """(x⊗y)·b = [x,b]⊗y + x⊗[y,b]."""
    out: Dict = {}
    for (x, y), c in t.items():
        for k, c2 in bracket(LinComb.basis(x), b).items():
            accumulate(out, (k, y), c * c2)
        for k, c2 in bracket(LinComb.basis(y), b).items():
            accumulate(out, (x, k), c * c2)
    return LinComb._raw(out)


# ---------------------------------------------------------------------------
# the symmetric algebra S(L)


def monomial(*necklaces: Necklace) -> SymMonomial:
    return tuple(sorted(necklaces))


def _mono_mul(m1: SymMonomial, m2: SymMonomial) -> SymMonomial:
    return tuple(sorted(m1 + m2))


def sym_from_L(x: LinComb) -> LinComb:
    """Embed L into S(L) as degree-one monomials."""
    return x.map_keys(lambda n: (n,))


def sym_product(x: LinComb, y: LinComb) -> LinComb:
    return bilinear(x, y, _mono_mul)


@lru_cache(maxsize=None)
def _sym_bracket_basis(m1: SymMonomial, m2: SymMonomial) -> LinComb:
    acc: Dict[SymMonomial, Poly2] = {}
    for i, a in enumerate(m1):
        rest1 = m1[:i] + m1[i + 1:]
        for j, b in enumerate(m2):
            rest2 = m2[:j] + m2[j + 1:]
            for n, c in bracket_basis(a, b).items():
                accumulate(acc, tuple(sorted(rest1 + rest2 + (n,))), c)
    return LinComb._raw(acc)


def sym_bracket(x: LinComb, y: LinComb) -> LinComb:
    """Poisson bracket on S(L): the necklace bracket extended by Leibniz."""
    return bilinear(x, y, _sym_bracket_basis)


@lru_cache(maxsize=None)
def _sym_delta_basis(m: SymMonomial) -> LinComb:
    acc: Dict = {}
    idx = range(len(m))
    for r in range(len(m) + 1):
        for chosen in combinations(idx, r):
            left = tuple(m[i] for i in chosen)
            right = tuple(m[i] for i in idx if i not in chosen)
            accumulate(acc, (left, right), Poly2.const(1))
    return LinComb._raw(acc)


def sym_delta(x: LinComb) -> LinComb:
    """Coproduct on S(L) with primitive necklaces."""
    return x.map_keys(_sym_delta_basis)


def pair_product(x: LinComb, y: LinComb, mul) -> LinComb:
    """Product in A⊗A given the product ``mul`` of A on LinCombs of keys."""
    out: Dict = {}
    for (x1, x2), c in x.items():
        for (y1, y2), d in y.items():
            left = mul(LinComb.basis(x1), LinComb.basis(y1))
            right = mul(LinComb.basis(x2), LinComb.basis(y2))
            cd = c * d
            for k1, c1 in left.items():
                for k2, c2 in right.items():
                    accumulate(out, (k1, k2), cd * c1 * c2)
    return LinComb._raw(out)


@lru_cache(maxsize=None)
def _sym_cobracket_basis(m: SymMonomial) -> LinComb:
    # ν(a₁⋯a_m) = Σ_i ν(a_i)·Δ(rest), which is the co-Leibniz extension in a commutative algebra
    total = LinComb()
    for i, a in enumerate(m):
        rest = m[:i] + m[i + 1:]
        nu = cobracket_basis(a).map_keys(lambda k: ((k[0],), (k[1],)))
        total = total + pair_product(nu, _sym_delta_basis(rest), sym_product)
    return total


def sym_cobracket(x: LinComb) -> LinComb:
    return x.map_keys(_sym_cobracket_basis)


def sym_pair_bracket(x: LinComb, y: LinComb) -> LinComb:
    """Bracket on S(L)⊗S(L): [x1⊗x2, y1⊗y2] = [x1,y1]⊗x2y2 + x1y1⊗[x2,y2]."""
    out: Dict = {}
    for (x1, x2), c in x.items():
        for (y1, y2), d in y.items():
            cd = c * d
            for k1, c1 in _sym_bracket_basis(x1, y1).items():
                accumulate(out, (k1, _mono_mul(x2, y2)), cd * c1)
            for k2, c2 in _sym_bracket_basis(x2, y2).items():
                accumulate(out, (_mono_mul(x1, y1), k2), cd * c2)
    return LinComb._raw(out)


# ---------------------------------------------------------------------------
# text form


def necklace_str(q: Quiver, n: Necklace) -> str:
    if n.is_vertex:
        return f"[{q.vertex_name(n.vertex)}]"
    return "".join(q.edge_name(e) for e in n.edges)


def monomial_str(q: Quiver, m: SymMonomial) -> str:
    if not m:
        return "1"
    return "·".join(necklace_str(q, n) for n in m)


def format_L(q: Quiver, x: LinComb) -> str:
    return format_lincomb(x, lambda n: necklace_str(q, n))


def format_S(q: Quiver, x: LinComb) -> str:
    return format_lincomb(x, lambda m: monomial_str(q, m), sort_key=lambda m: (len(m), m), unit_key=())


def format_pairs(q: Quiver, x: LinComb, show) -> str:
    return format_lincomb(x, lambda k: " ⊗ ".join(show(q, part) for part in k))


def split_edge_run(q: Quiver, run: str) -> List[Edge]:
    """Split a run like ``a*b*ba*`` into edges; ambiguity is an error."""
    names = sorted(q.arrow_names(), key=len, reverse=True)
    n = len(run)
    # ways[i] = list of segmentations of run[i:], capped at 2 to detect ambiguity
    ways: List[Optional[List[List[str]]]] = [None] * (n + 1)
    ways[n] = [[]]
    for i in range(n - 1, -1, -1):
        found: List[List[str]] = []
        for name in names:
            if run.startswith(name, i):
                j = i + len(name)
                for tok in ((name + "*", j + 1),) if j < n and run[j] == "*" else ((name, j),):
                    tail = ways[tok[1]]
                    if tail:
                        for t in tail:
                            found.append([tok[0]] + t)
                            if len(found) > 1:
                                break
            if len(found) > 1:
                break
        ways[i] = found
    if not ways[0]:
        raise NecklaceError(f"cannot split {run!r} into edge names")
    if len(ways[0]) > 1:
        raise NecklaceError(f"ambiguous edge run {run!r}; separate edges with spaces")
    return [q.parse_edge(t) for t in ways[0][0]]


def parse_edges(q: Quiver, text: str) -> List[Edge]:
    edges: List[Edge] = []
    for token in text.split():
        try:
            edges.append(q.parse_edge(token))
        except KeyError:
            edges.extend(split_edge_run(q, token))
    return edges


def parse_necklace(q: Quiver, text: str) -> Necklace:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        try:
            return vertex_necklace(q.vertex(text[1:-1].strip()))
        except KeyError as exc:
            raise NecklaceError(str(exc)) from None
    try:
        edges = parse_edges(q, text)
    except KeyError as exc:
        raise NecklaceError(str(exc)) from None
    if not edges:
        raise NecklaceError("empty necklace")
    return canonical(edges)


def parse_monomial(q: Quiver, text: str) -> SymMonomial:
    text = text.strip()
    if text == "1":
        return ()
    return monomial(*(parse_necklace(q, part) for part in text.split("·")))


def necklaces_of(x: Iterable) -> List[Necklace]:
    return [k for k, _ in x]
