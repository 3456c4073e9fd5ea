"""Seeded property suites over random quivers and elements.

Each suite draws one random configuration per sample index and checks a
handful of identities on it.  Sample ``i`` of suite ``s`` under seed ``S`` is
always generated from ``random.Random(f"{S}:{s}:{i}")``, so any failure can be
replayed in isolation and parallel runs merge deterministically.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import coloring as col
from . import heightlink as hl
from . import maps
from . import necklace as nk
from .quiver import Quiver
from .sampling import random_link, random_necklace, random_quiver
from .scalars import H, HBAR, LinComb, Poly2
from .textform import format_any

SCHEMA_VERSION = 1


@dataclass
class Outcome:
    identity: str
    ok: bool
    inputs: Dict[str, str]
    lhs: str = ""
    rhs: str = ""


@dataclass
class IdentityReport:
    identity: str
    samples: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)

    def to_json(self) -> Dict[str, object]:
        return {"identity": self.identity, "samples": self.samples, "passed": not self.failures,
                "failures": self.failures}


def _outcome(q: Quiver, name: str, lhs: LinComb, rhs: LinComb, inputs: Dict[str, str]) -> Outcome:
    ok = lhs == rhs
    if ok:
        return Outcome(name, True, inputs)
    return Outcome(name, False, inputs, format_any(q, lhs), format_any(q, rhs))


def _zero(q: Quiver, name: str, value: LinComb, inputs: Dict[str, str]) -> Outcome:
    return _outcome(q, name, value, LinComb(), inputs)


def _inputs(q: Quiver, **elements) -> Dict[str, str]:
    out = {"quiver": q.to_text()}
    for k, v in elements.items():
        out[k] = format_any(q, v) if isinstance(v, LinComb) else str(v)
    return out


def _link_element(x: hl.Link) -> LinComb:
    return hl.element(x)


def _random_coeff(rng: random.Random) -> Poly2:
    return Poly2({(rng.randint(0, 1), rng.randint(0, 1)): rng.choice([1, -1, 2, -3])})


# ---------------------------------------------------------------------------
# suites


def suite_lie_bialgebra(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    n = min(6, max_edges)
    x, y, z = (nk.as_element(random_necklace(rng, q, n, vertex_prob=0.1)) for _ in range(3))
    inp = _inputs(q, x=x, y=y, z=z)
    br = nk.bracket
    out = [
        _zero(q, "antisymmetry", br(x, y) + br(y, x), inp),
        _zero(q, "jacobi", br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)), inp),
        _zero(q, "cobracket-skew", nk.cobracket(x) + nk.perm(nk.cobracket(x)), inp),
    ]
    t = nk.id_tensor_cobracket(nk.cobracket(x))
    out.append(_zero(q, "co-jacobi", t + nk.cyclic3(t) + nk.cyclic3(nk.cyclic3(t)), inp))
    out.append(_outcome(q, "cocycle", nk.cobracket(br(x, y)),
                        nk.act_left(x, nk.cobracket(y)) + nk.act_right(nk.cobracket(x), y), inp))
    lengths_ok = True
    (kx, _), = x.items()
    (ky, _), = y.items()
    for k, _ in br(x, y).items():
        lengths_ok &= k.length == kx.length + ky.length - 2
    for (a, b), _ in nk.cobracket(x).items():
        lengths_ok &= a.length + b.length == kx.length - 2
    out.append(Outcome("length-bookkeeping", lengths_ok, inp))
    # bi-Poisson compatibility on S(L) with monomials of degree ≤ 2
    a = nk.sym_product(nk.sym_from_L(x), nk.sym_from_L(z)) if rng.random() < 0.5 else nk.sym_from_L(x)
    b = nk.sym_from_L(y)
    lhs = nk.sym_cobracket(nk.sym_bracket(a, b))
    rhs = nk.sym_pair_bracket(nk.sym_delta(a), nk.sym_cobracket(b)) + \
        nk.sym_pair_bracket(nk.sym_cobracket(a), nk.sym_delta(b))
    out.append(_outcome(q, "bi-poisson", lhs, rhs, _inputs(q, a=a, b=b)))
    out.append(_outcome(q, "leibniz", nk.sym_bracket(a, nk.sym_product(b, nk.sym_from_L(z))),
                        nk.sym_product(nk.sym_bracket(a, b), nk.sym_from_L(z))
                        + nk.sym_product(b, nk.sym_bracket(a, nk.sym_from_L(z))), _inputs(q, a=a, b=b, z=z)))
    return out


def suite_nq_bialgebra(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    half = max(1, max_edges // 2)
    third = max(1, max_edges // 3)
    out = []
    x = _link_element(random_link(rng, q, third))
    y = _link_element(random_link(rng, q, third))
    z = _link_element(random_link(rng, q, third))
    inp = _inputs(q, x=x, y=y, z=z)
    out.append(_outcome(q, "associativity", hl.n_product(x, hl.n_product(y, z)),
                        hl.n_product(hl.n_product(x, y), z), inp))
    raw = random_link(rng, q, max_edges)
    w = _link_element(raw)
    inp = _inputs(q, x=LinComb.basis(raw))
    d = col.coproduct(w)
    d2 = col.coproduct(w, 3)
    left = col.apply_at(d, 0, lambda k: col.coproduct(LinComb.basis(k)))
    right = col.apply_at(d, 1, lambda k: col.coproduct(LinComb.basis(k)))
    out.append(_outcome(q, "coassociativity-left", left, d2, inp))
    out.append(_outcome(q, "coassociativity-right", right, d2, inp))
    out.append(_outcome(q, "coproduct-well-defined", d, col.normalize_tensor(col.coproduct_raw(raw, 2)), inp))
    defect = d - col.permute_pairs(d)
    out.append(Outcome("cocommutativity-defect-hbar", all(c.min_degree_hbar() >= 1 for _, c in defect.items()),
                       inp))
    counit_ok = col.coproduct(w, 1) == w.map_keys(lambda k: (k,))
    out.append(Outcome("coproduct-n1-identity", counit_ok, inp))
    a = _link_element(random_link(rng, q, half))
    b = _link_element(random_link(rng, q, half))
    inp = _inputs(q, x=a, y=b)
    out.append(_outcome(q, "multiplicativity", col.coproduct(hl.n_product(a, b)),
                        col.tensor_product_N(col.coproduct(a), col.coproduct(b)), inp))
    comm = hl.n_product(a, b) - hl.n_product(b, a)
    out.append(Outcome("commutator-h-divisible", all(c.min_degree_h() >= 1 for _, c in comm.items()), inp))
    out.append(_outcome(q, "normalize-idempotent", hl.normalize(w), w, _inputs(q, x=w)))
    return out


def suite_confluence(rng: random.Random, max_edges: int, schedules: int = 50, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    raw = random_link(rng, q, max_edges)
    ref = hl.normalize_link(raw)
    inp = _inputs(q, x=LinComb.basis(raw))
    for s in range(schedules):
        got = hl.normalize_link_random(raw, random.Random(rng.random()))
        if got != ref:
            inp = dict(inp, schedule=str(s))
            return [_outcome(q, "confluence", got, ref, inp)]
    return [Outcome("confluence", True, inp)]


def suite_quantization(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    half = max(1, max_edges // 2)
    x = _link_element(random_link(rng, q, half))
    y = _link_element(random_link(rng, q, half))
    inp = _inputs(q, x=x, y=y)
    r = maps.check_quantization(x, y)
    out = [_outcome(q, "quantization", r.lhs, r.rhs, inp)]
    r = maps.check_J_algebra(x, y)
    out.append(_outcome(q, "J-algebra-morphism", r.lhs, r.rhs, inp))
    w = _link_element(random_link(rng, q, max_edges))
    r = maps.check_J_coalgebra(w)
    out.append(_outcome(q, "J-coalgebra-morphism", r.lhs, r.rhs, _inputs(q, x=w)))
    return out


def suite_coquantization(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    x = _link_element(random_link(rng, q, max_edges))
    inp = _inputs(q, x=x)
    r = maps.check_coquantization(x)
    out = [_outcome(q, "coquantization", r.lhs, r.rhs, inp)]
    r = maps.check_p_h_coalgebra(x)
    out.append(_outcome(q, "p_h-coalgebra-morphism", r.lhs, r.rhs, inp))
    return out


def suite_in_E(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    x = _link_element(random_link(rng, q, max_edges)).scale(_random_coeff(rng))
    inp = _inputs(q, x=x)
    j = maps.J_map(x)
    return [Outcome("J-image-in-E", maps.is_in_E(j), inp, format_any(q, j), "")]


def suite_diagram(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    x = _link_element(random_link(rng, q, max_edges)).scale(_random_coeff(rng)) + \
        _link_element(random_link(rng, q, max_edges)).scale(_random_coeff(rng))
    inp = _inputs(q, x=x)
    r = maps.check_diagram(x)
    p = r.notes["p"]
    return [_outcome(q, "q_h∘p_hbar = p", r.lhs, p, inp), _outcome(q, "q_hbar∘p_h = p", r.rhs, p, inp)]


def suite_reducedness(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    x = _link_element(random_link(rng, q, max_edges))
    inp = _inputs(q, x=x)
    out = [
        _zero(q, "p_h(hbar x) = 0", maps.p_h_map(x.scale(HBAR)), inp),
        _zero(q, "p_hbar(h x) = 0", maps.p_hbar_map(x.scale(H)), inp),
    ]
    seq = maps.section_defect_orbit(x, limit=max_edges + 2)
    out.append(Outcome("section-nilpotent", seq[-1].is_zero(), inp))
    # p_h is injective modulo hbar: the canonical lift inverts it
    back = LinComb()
    for w, c in maps.p_h_map(x).items():
        back = back + hl.element(hl.lift(w)).specialize(set_hbar=0).scale(c)
    out.append(_outcome(q, "lift∘p_h = id mod hbar", back, hl.reduce_mod_hbar(x), inp))
    return out


def suite_specialization(rng: random.Random, max_edges: int, quiver: Optional[Quiver] = None) -> List[Outcome]:
    q = quiver if quiver is not None else random_quiver(rng)
    half = max(1, max_edges // 2)
    rx, ry = random_link(rng, q, half), random_link(rng, q, half)
    inp = _inputs(q, x=LinComb.basis(rx), y=LinComb.basis(ry))

    def norm1(k):
        return hl.normalize_link_h1(hl.compress_heights(k))

    x1 = norm1(rx)
    y1 = norm1(ry)
    prod1 = LinComb()
    for a, ca in x1.items():
        for b, cb in y1.items():
            prod1 = prod1 + norm1(hl.link_product(a, b)).scale(ca * cb)
    full = hl.n_product(hl.element(rx), hl.element(ry)).specialize(set_h=1)
    out = [_outcome(q, "h=1 commutes with product", full, prod1, inp)]
    w = random_link(rng, q, max_edges)
    d_full = col.coproduct(hl.element(w)).specialize(set_h=1)
    raw = col.coproduct_raw(w, 2).specialize(set_h=1)
    d1 = LinComb()
    for (a, b), c in raw.items():
        for ka, ca in norm1(a).items():
            for kb, cb in norm1(b).items():
                d1 = d1 + LinComb.basis((ka, kb), c * ca * cb)
    out.append(_outcome(q, "h=1 commutes with coproduct", d_full, d1, _inputs(q, x=LinComb.basis(w))))
    return out


SUITES: Dict[str, Callable[..., List[Outcome]]] = {
    "lie-bialgebra": suite_lie_bialgebra,
    "nq-bialgebra": suite_nq_bialgebra,
    "confluence": suite_confluence,
    "quantization": suite_quantization,
    "coquantization": suite_coquantization,
    "in-E": suite_in_E,
    "diagram": suite_diagram,
    "reducedness": suite_reducedness,
    "specialization": suite_specialization,
}


def run_sample(suite: str, seed: int, index: int, max_edges: int,
               quiver: Optional[Quiver] = None) -> List[Outcome]:
    rng = random.Random(f"{seed}:{suite}:{index}")
    return SUITES[suite](rng, max_edges, quiver=quiver)


def _run_chunk(args):
    suite, seed, indices, max_edges, quiver = args
    return [(i, run_sample(suite, seed, i, max_edges, quiver)) for i in indices]


def run_suite(suite: str, samples: int = 200, seed: int = 0, max_edges: int = 8,
              jobs: int = 1, quiver: Optional[Quiver] = None) -> Dict[str, object]:
    """Run ``samples`` seeded samples and merge per-identity reports by sample index.

    With ``quiver`` every sample lives on that quiver; otherwise each sample
    draws its own small random quiver.
    """
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    start = time.perf_counter()
    indices = list(range(samples))
    if jobs > 1:
        chunks = [(suite, seed, indices[k::jobs], max_edges, quiver) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for chunk in pool.map(_run_chunk, chunks) for r in chunk]
        results.sort(key=lambda r: r[0])
    else:
        results = _run_chunk((suite, seed, indices, max_edges, quiver))
    reports: Dict[str, IdentityReport] = {}
    for i, outcomes in results:
        for o in outcomes:
            rep = reports.setdefault(o.identity, IdentityReport(o.identity))
            rep.samples += 1
            if not o.ok:
                rep.failures.append({"sample": i, "inputs": o.inputs, "lhs": o.lhs, "rhs": o.rhs})
    return {
        "schema": SCHEMA_VERSION,
        "suite": suite,
        "seed": seed,
        "samples": samples,
        "max_edges": max_edges,
        "quiver": quiver.to_text() if quiver is not None else None,
        "seconds": round(time.perf_counter() - start, 3),
        "passed": all(not r.failures for r in reports.values()),
        "reports": [r.to_json() for r in reports.values()],
    }
