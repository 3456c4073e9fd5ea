from fractions import Fraction

import pytest

from necklace_bq import tensoralg as ta
from necklace_bq.necklace import bracket, as_element, parse_necklace
from necklace_bq.scalars import H, HBAR, LinComb


@pytest.fixture
def gens(jordan):
    return [parse_necklace(jordan, s) for s in ("a a*", "b* b a* a*", "[v1]", "[v2]", "a* a*")]


def test_shuffle_of_letters(gens):
    al, be = gens[0], gens[1]
    assert ta.shuffle(ta.word(al), ta.word(be)) == ta.word(al, be) + ta.word(be, al)
    assert ta.shuffle(ta.word(al), ta.word(al)) == ta.word(al, al).scale(2)
    assert ta.shuffle(ta.word(), ta.word(be)) == ta.word(be)


def test_shuffle_is_associative_and_commutative(gens):
    x = ta.word(gens[0], gens[1])
    y = ta.word(gens[2])
    z = ta.word(gens[3], gens[4])
    assert ta.shuffle(x, y) == ta.shuffle(y, x)
    assert ta.shuffle(ta.shuffle(x, y), z) == ta.shuffle(x, ta.shuffle(y, z))


def test_deconcatenation(gens):
    al, be = gens[0], gens[1]
    d = ta.diag(ta.word(al, be))
    assert d == LinComb({((), (al, be)): 1, ((al,), (be,)): 1, ((al, be), ()): 1})


def test_deconcatenation_is_shuffle_multiplicative(gens):
    x, y = ta.word(gens[0], gens[1]), ta.word(gens[4])
    lhs = ta.diag(ta.shuffle(x, y))
    dx, dy = ta.diag(x), ta.diag(y)
    rhs = LinComb()
    for (a1, a2), c in dx.items():
        for (b1, b2), d in dy.items():
            for w1, c1 in ta.shuffle(LinComb.basis(a1), LinComb.basis(b1)).items():
                for w2, c2 in ta.shuffle(LinComb.basis(a2), LinComb.basis(b2)).items():
                    rhs = rhs + LinComb.basis((w1, w2), c * d * c1 * c2)
    assert lhs == rhs


def test_bracket_on_letters_is_necklace_bracket(gens):
    al, be = gens[0], gens[1]
    expected = bracket(as_element(al), as_element(be)).map_keys(lambda n: LinComb.basis((n,)))
    assert ta.f_bracket(ta.word(al), ta.word(be)) == expected


def test_bracket_is_a_biderivation(gens):
    x, y, z = ta.word(gens[0]), ta.word(gens[1]), ta.word(gens[4], gens[1])
    lhs = ta.f_bracket(x, ta.shuffle(y, z))
    rhs = ta.shuffle(ta.f_bracket(x, y), z) + ta.shuffle(y, ta.f_bracket(x, z))
    assert lhs == rhs
    assert (ta.f_bracket(x, z) + ta.f_bracket(z, x)).is_zero()


def test_E_membership_worked_examples(gens):
    al, be, v1, v2, aa = gens
    jx = ta.word(al) + ta.word(v1, v1).scale(HBAR)
    jy = ta.word(be) - ta.word(aa, v2).scale(HBAR)
    assert ta.is_in_E(jx) and ta.is_in_E(jy)
    assert not ta.is_in_E(ta.word(be))
    (n, i, defect), = list(ta.E_defects(ta.word(be)))
    assert (n, i) == (2, 1)


def test_symm(gens):
    al, be = gens[0], gens[1]
    assert ta.symm(ta.word(al, be) + ta.word(be, al)) == LinComb({tuple(sorted((al, be))): 1})
    assert ta.symm(ta.word(al, al, al)).coeff((al, al, al)) == Fraction(1, 6)


def test_F_rejects_h(gens):
    with pytest.raises(ta.CoefficientError):
        ta.check_F(ta.word(gens[0]).scale(H))


def test_word_round_trip(jordan, gens):
    w = (gens[0], gens[2], gens[1])
    assert ta.parse_word(jordan, ta.word_str(jordan, w)) == w
    assert ta.parse_word(jordan, "1") == ()
