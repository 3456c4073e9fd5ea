from itertools import combinations

from necklace_bq import coloring as col
from necklace_bq.heightlink import UNIT, element, parse_link
from necklace_bq.scalars import HBAR, LinComb

X_TEXT = "(a,1)(a*,2)"
Y_TEXT = "(b*,1)(b,2)(a*,3)(a*,4)"
OCT_TEXT = "(a,1)(d*,2)(c*,3)(b*,4)(a*,5)(f,6)(g,7)(e*,9)"


def test_matchings_of_X(jordan):
    x = parse_link(jordan, X_TEXT)
    ms = col.enumerate_matchings(x)
    assert len(ms) == 2 and () in ms


def test_matchings_of_Y_pair_b_with_b_star(jordan):
    y = parse_link(jordan, Y_TEXT)
    nontrivial = [d for d in col.matching_data(y) if d.matching]
    assert len(nontrivial) == 1
    (p1, p2), = nontrivial[0].matching
    edges = {jordan.edge_name(y.knots[p[0]][p[1]][0]) for p in (p1, p2)}
    assert edges == {"b", "b*"}


def test_two_colorings_count(jordan):
    # empty matching: the knot takes either color; matched: the forced coloring
    assert len(col.enumerate_colorings(parse_link(jordan, X_TEXT), 2)) == 3


def test_vertex_only_colorings(jordan):
    x = parse_link(jordan, "[v1] & [v2] & [v2]")
    assert len(col.enumerate_colorings(x, 2)) == 2 ** 3


def test_matched_split_of_X(jordan):
    x = parse_link(jordan, X_TEXT)
    d, = [d for d in col.matching_data(x) if d.matching]
    assert (d.negative, d.size, d.norm) == (0, 2, -1)
    c, = [c for c in col.enumerate_colorings(x, 2) if c.matching]
    s = col.split(x, c)
    assert s.weight == HBAR
    assert s.parts == (parse_link(jordan, "[v1]"), parse_link(jordan, "[v1]"))


def test_matched_split_of_Y(jordan):
    y = parse_link(jordan, Y_TEXT)
    d, = [d for d in col.matching_data(y) if d.matching]
    assert (d.negative, d.size, d.norm) == (1, 2, -1)
    c, = [c for c in col.enumerate_colorings(y, 2) if c.matching]
    s = col.split(y, c)
    assert s.weight == -HBAR
    assert s.parts == (parse_link(jordan, "(a*,3)(a*,4)"), parse_link(jordan, "[v2]"))


def test_constant_coloring_gives_primitive_terms(jordan):
    y = parse_link(jordan, Y_TEXT)
    raw = col.coproduct_raw(y, 2)
    assert raw.coeff((y, UNIT)) == 1 and raw.coeff((UNIT, y)) == 1


def test_coproduct_of_X_and_Y(jordan):
    X, Y = element(parse_link(jordan, X_TEXT)), element(parse_link(jordan, Y_TEXT))
    one = parse_link(jordan, "1")
    v1, v2 = parse_link(jordan, "[v1]"), parse_link(jordan, "[v2]")
    x = parse_link(jordan, X_TEXT)
    y = parse_link(jordan, "(a*,1)(a*,2)(b*,3)(b,4)")  # standard form of Y
    assert Y == LinComb.basis(y)
    aa = parse_link(jordan, "(a*,1)(a*,2)")
    assert col.coproduct(X) == LinComb({(x, one): 1, (one, x): 1, (v1, v1): HBAR})
    assert col.coproduct(Y) == LinComb({(y, one): 1, (one, y): 1, (aa, v2): -HBAR})


def test_cocommutativity_defects(jordan):
    X, Y = element(parse_link(jordan, X_TEXT)), element(parse_link(jordan, Y_TEXT))
    dX = col.coproduct(X)
    assert (dX - col.permute_pairs(dX)).is_zero()
    dY = col.coproduct(Y)
    v2, aa = parse_link(jordan, "[v2]"), parse_link(jordan, "(a*,1)(a*,2)")
    assert (dY - col.permute_pairs(dY)).div_hbar() == LinComb({(v2, aa): 1, (aa, v2): -1})


def _spread(n, slots, parts):
    key = [UNIT] * n
    for s, p in zip(slots, parts):
        key[s] = p
    return tuple(key)


def test_iterated_coproducts(jordan):
    x, y = parse_link(jordan, X_TEXT), parse_link(jordan, "(a*,1)(a*,2)(b*,3)(b,4)")
    v1, v2, aa = parse_link(jordan, "[v1]"), parse_link(jordan, "[v2]"), parse_link(jordan, "(a*,1)(a*,2)")
    for n in (3, 4):
        ex = LinComb({_spread(n, (i,), (x,)): 1 for i in range(n)}) + \
            LinComb({_spread(n, (i, j), (v1, v1)): HBAR for i, j in combinations(range(n), 2)})
        assert col.coproduct(element(x), n) == ex
        ey = LinComb({_spread(n, (i,), (y,)): 1 for i in range(n)}) + \
            LinComb({_spread(n, (i, j), (aa, v2)): -HBAR for i, j in combinations(range(n), 2)})
        assert col.coproduct(element(y), n) == ey


def test_vertex_is_primitive(jordan):
    v = element(parse_link(jordan, "[v1]"))
    one, v1 = parse_link(jordan, "1"), parse_link(jordan, "[v1]")
    assert col.coproduct(v) == LinComb({(v1, one): 1, (one, v1): 1})


def test_octagon_single_nontrivial_coloring(octagon):
    x = parse_link(octagon, OCT_TEXT)
    nontrivial = [d for d in col.matching_data(x) if d.matching]
    assert len(nontrivial) == 1
    d = nontrivial[0]
    assert (d.negative, d.size, d.norm) == (0, 2, -1)
    assert d.weight == HBAR
    one = parse_link(octagon, "1")
    fge = parse_link(octagon, "(f,6)(g,7)(e*,9)")
    dcb = parse_link(octagon, "(d*,2)(c*,3)(b*,4)")
    assert col.coproduct_raw(x, 2) == LinComb({(x, one): 1, (one, x): 1, (fge, dcb): HBAR})


def test_coproduct_is_multiplicative_on_examples(jordan):
    from necklace_bq.heightlink import n_product
    X, Y = element(parse_link(jordan, X_TEXT)), element(parse_link(jordan, Y_TEXT))
    assert col.coproduct(n_product(X, Y)) == col.tensor_product_N(col.coproduct(X), col.coproduct(Y))
