import pytest

from necklace_bq.quiver import Edge, Quiver, QuiverSyntaxError, pairing, parse_quiver, star


def test_jordan_double_edges(jordan):
    names = sorted(jordan.edge_name(e) for e in jordan.double_edges())
    assert names == ["a", "a*", "b", "b*"]
    b = jordan.edge("b")
    assert jordan.vertex_name(b.src) == "v2" and jordan.vertex_name(b.tgt) == "v1"
    bs = jordan.edge("b", starred=True)
    assert (bs.src, bs.tgt) == (b.tgt, b.src)


def test_pairing_signs(jordan):
    a, a_ = jordan.parse_edge("a"), jordan.parse_edge("a*")
    b = jordan.parse_edge("b")
    assert pairing(a, a_) == 1
    assert pairing(a_, a) == -1
    assert pairing(a, a) == 0
    assert pairing(a, b) == 0
    assert star(star(a)) == a and star(a) == a_


def test_parse_quiver_round_trip(jordan, octagon):
    for q in (jordan, octagon):
        assert parse_quiver(q.to_text()) == q


def test_parse_quiver_comments_and_blank_lines():
    q = parse_quiver("# two loops\n\nvertex x  # the only vertex\narrow s: x -> x\narrow t: x -> x\n")
    assert q.vertices == ["x"] or list(q.vertices) == ["x"]
    assert q.arrow_names() == ["s", "t"]


@pytest.mark.parametrize("text, line", [
    ("vertex v\narrow a v -> v\n", 2),
    ("vertex v\narrow a: v -> w\n", 2),
    ("vertex v\nvertex v\n", 2),
    ("bogus\n", 1),
])
def test_parse_quiver_errors_carry_line(text, line):
    with pytest.raises(QuiverSyntaxError) as err:
        parse_quiver(text)
    assert err.value.line == line


def test_empty_quiver():
    q = Quiver()
    assert q.double_edges() == []


def test_unknown_edge(jordan):
    with pytest.raises(KeyError):
        jordan.parse_edge("z")
    assert isinstance(jordan.parse_edge("a*"), Edge)
