"""The maps of the biquantization square and the congruences they satisfy.

    N(Q)_{h,hbar} --p_h--> V_h(L_h)
         |  \\                 |
       p_hbar  p             q_hbar
         v      \\             v
    S(L_hbar) ----q_h----> S(L)

Every map takes and returns ``LinComb`` values; inputs from N(Q)_{h,hbar} may
be keyed by arbitrary links and are normalized first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List

from .coloring import coproduct, permute_pairs, single_component_terms
from .envelope import pbw_word, q_hbar_map, v_cobracket, v_delta
from .heightlink import Link, element, link_necklaces, lift, n_product, normalize
from .necklace import Necklace
from .scalars import LinComb, Poly2, accumulate
from .tensoralg import diag, f_bracket, is_in_E, shuffle, symm

__all__ = [
    "q_map", "J_map", "p_hbar_map", "p_h_map", "p_map", "q_h_map", "q_hbar_map",
    "xi_map", "check_quantization", "check_coquantization", "check_diagram",
    "check_J_algebra", "check_J_coalgebra", "check_J_in_E", "check_p_h_coalgebra",
    "section_defect_orbit", "CheckResult", "J_tensor",
]


def _pi(c: Poly2) -> Poly2:
    return c.specialize(set_h=0)


def q_map(x: LinComb) -> LinComb:
    """π-linear collapse: one-component links go to their necklace, others to 0."""
    out: Dict[Necklace, Poly2] = {}
    for k, c in normalize(x).items():
        c = _pi(c)
        if c and k.component_count == 1:
            accumulate(out, link_necklaces(k)[0], c)
    return LinComb._raw(out)


def J_map(x: LinComb) -> LinComb:
    """𝒥 = Σ_n q^{⊗n}∘Δ^{n−1}, summed over colorings with one component per color."""
    out: Dict = {}
    for k, c in normalize(x).items():
        c = _pi(c)
        if not c:
            continue
        for w, c2 in single_component_terms(k).items():
            accumulate(out, w, c * c2)
    return LinComb._raw(out)


def p_hbar_map(x: LinComb) -> LinComb:
    """symm ∘ 𝒥 into S(L_hbar)."""
    return symm(J_map(x))


def _link_word(k: Link):
    # standard links store knots in height order; vertices are central
    return tuple(link_necklaces(k))


def p_h_map(x: LinComb) -> LinComb:
    """Drop hbar terms of the normal form, multiply components in height order in V_h."""
    out: Dict = {}
    for k, c in normalize(x).items():
        c = c.specialize(set_hbar=0)
        if not c:
            continue
        for w, c2 in pbw_word(_link_word(k)).items():
            accumulate(out, w, c * c2)
    return LinComb._raw(out)


def p_map(x: LinComb) -> LinComb:
    """h, hbar ↦ 0; a link goes to the symmetric monomial of its necklaces."""
    out: Dict = {}
    for k, c in normalize(x).items():
        c = c.specialize(set_h=0, set_hbar=0)
        if c:
            accumulate(out, tuple(sorted(link_necklaces(k))), c)
    return LinComb._raw(out)


def q_h_map(x: LinComb) -> LinComb:
    """S(L_hbar) → S(L): hbar ↦ 0."""
    return x.specialize(set_hbar=0)


def xi_map(x: LinComb) -> LinComb:
    """Section S(L_hbar) → N/hN: α₁⋯α_m ↦ X_{α₁} ∗ ⋯ ∗ X_{α_m}, reduced mod h."""
    out: Dict = {}
    for m, c in x.items():
        for k, c2 in element(lift(m)).items():
            accumulate(out, k, c * c2)
    return LinComb._raw(out).specialize(set_h=0)


def section_defect_orbit(x: LinComb, limit: int = 64) -> List[LinComb]:
    """Iterates of (ξ∘p_hbar − id) on [x] mod h until zero (or ``limit`` steps)."""
    y = normalize(x).specialize(set_h=0)
    seq = [y]
    for _ in range(limit):
        if y.is_zero():
            break
        y = xi_map(p_hbar_map(y)) - y
        seq.append(y)
    return seq


# ---------------------------------------------------------------------------
# congruences


@dataclass
class CheckResult:
    ok: bool
    lhs: Any
    rhs: Any
    notes: Dict[str, Any] = field(default_factory=dict)


def check_quantization(x: LinComb, y: LinComb) -> CheckResult:
    """𝒥(h⁻¹(x∗y − y∗x)) = {𝒥(x), 𝒥(y)} in F(L_hbar)."""
    comm = n_product(x, y) - n_product(y, x)
    lhs = J_map(comm.div_h())
    rhs = f_bracket(J_map(x), J_map(y))
    return CheckResult(lhs == rhs, lhs, rhs)


def check_coquantization(x: LinComb) -> CheckResult:
    """(p_h⊗p_h)(hbar⁻¹(Δx − PermΔx)) = ν(p_h(x)) in V_h⊗V_h."""
    d = coproduct(normalize(x))
    defect = (d - permute_pairs(d)).div_hbar()
    lhs_acc: Dict = {}
    for (k1, k2), c in defect.items():
        c = c.specialize(set_hbar=0)
        if not c:
            continue
        for w1, c1 in pbw_word(_link_word(k1)).items():
            for w2, c2 in pbw_word(_link_word(k2)).items():
                accumulate(lhs_acc, (w1, w2), c * c1 * c2)
    lhs = LinComb._raw(lhs_acc)
    rhs = v_cobracket(p_h_map(x))
    return CheckResult(lhs == rhs, lhs, rhs)


def check_diagram(x: LinComb) -> CheckResult:
    """q_h∘p_hbar = q_hbar∘p_h = p."""
    a = q_h_map(p_hbar_map(x))
    b = q_hbar_map(p_h_map(x))
    c = p_map(x)
    return CheckResult(a == b == c, a, b, {"p": c})


def check_J_algebra(x: LinComb, y: LinComb) -> CheckResult:
    lhs = J_map(n_product(x, y))
    rhs = shuffle(J_map(x), J_map(y))
    return CheckResult(lhs == rhs, lhs, rhs)


def J_tensor(x: LinComb) -> LinComb:
    """(𝒥⊗𝒥) on a pair-keyed element of N⊗N."""
    out: Dict = {}
    for (k1, k2), c in x.items():
        c = _pi(c)
        if not c:
            continue
        for w1, c1 in single_component_terms(k1).items():
            for w2, c2 in single_component_terms(k2).items():
                accumulate(out, (w1, w2), c * c1 * c2)
    return LinComb._raw(out)


def check_J_coalgebra(x: LinComb) -> CheckResult:
    lhs = J_tensor(coproduct(normalize(x)))
    rhs = diag(J_map(x))
    return CheckResult(lhs == rhs, lhs, rhs)


def check_J_in_E(x: LinComb) -> CheckResult:
    j = J_map(x)
    return CheckResult(is_in_E(j), j, None)


def check_p_h_coalgebra(x: LinComb) -> CheckResult:
    """(p_h⊗p_h)∘Δ = Δ_V∘p_h."""
    out: Dict = {}
    for (k1, k2), c in coproduct(normalize(x)).items():
        c = c.specialize(set_hbar=0)
        if not c:
            continue
        for w1, c1 in pbw_word(_link_word(k1)).items():
            for w2, c2 in pbw_word(_link_word(k2)).items():
                accumulate(out, (w1, w2), c * c1 * c2)
    lhs = LinComb._raw(out)
    rhs = v_delta(p_h_map(x))
    return CheckResult(lhs == rhs, lhs, rhs)
