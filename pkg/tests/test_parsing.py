import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge import (
    CoefficientOutOfRing,
    Gf,
    ParseError,
    Polynomial,
    Product,
    Quot,
    SemanticError,
    Zn,
    build_ring,
    format_ring_spec,
    parse_element,
    parse_poly,
    parse_ring_spec,
)
from ringforge.corpus import base_specs, constructible_specs, product_specs


@pytest.mark.parametrize(
    "text, spec",
    [
        ("Z6", Zn(6)),
        ("Z2[x]/(x^3+x^4)", Quot(2, (0, 0, 0, 1, 1))),
        ("GF(4)", Gf(2, 2, (1, 1, 1))),
        ("GF(4, x^2+x+1)", Gf(2, 2, (1, 1, 1))),
        ("GF(8,x^3+x^2+1)", Gf(2, 3, (1, 0, 1, 1))),
        ("Z3 x Z2", Product((Zn(3), Zn(2)))),
        ("Z2xGF(4)xZ2[x]/(x^2)", Product((Zn(2), Gf(2, 2), Quot(2, (0, 0, 1))))),
        ("(Z2xZ3)xZ2", Product((Product((Zn(2), Zn(3))), Zn(2)))),
        (" Z 1 0 ", Zn(10)),
    ],
)
def test_parse_ring_spec(text, spec):
    assert parse_ring_spec(text) == spec


@pytest.mark.parametrize(
    "text, offset",
    [("Z", 1), ("Q5", 0), ("Z2xx", 3), ("GF(4", 4), ("Z2[x]/(x^2", 10), ("Z6 Z2", 3), ("Z2[x]/(y)", 7)],
)
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_ring_spec(text)
    assert info.value.offset == offset


@pytest.mark.parametrize("text", ["GF(6)", "GF(1)", "Z4[x]/(x^2)"])
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse_ring_spec(text)


def test_roundtrip_corpus():
    specs = constructible_specs(64)
    assert len(specs) > 1000
    for spec in specs:
        text = format_ring_spec(spec)
        assert parse_ring_spec(text) == spec, text
        assert format_ring_spec(parse_ring_spec(text)) == text


def test_format_is_canonical():
    assert format_ring_spec(parse_ring_spec(" GF( 4 , x^2 + x + 1 ) ")) == "GF(4)"
    assert format_ring_spec(parse_ring_spec("Z2[x]/(x^4+x^3)")) == "Z2[x]/(x^4+x^3)"
    assert format_ring_spec(parse_ring_spec("Z3[x]/(x^2+4)")) == "Z3[x]/(x^2+1)"


def test_parse_poly_examples(R):
    z2 = R("Z2")
    assert parse_poly("x^2+x", z2).codes == (0, 1, 1)
    dual = R("Z2[x]/(x^2)")
    F = parse_poly("t*x", dual)
    assert F.codes == (0, 2) and str(F) == "t*x"
    zero = parse_poly("0", R("GF(4)"))
    assert zero.is_zero() and zero.degree is None


def test_parse_poly_literal_forms(R):
    gf4 = R("GF(4)")
    a = parse_poly("(1+t)*x", gf4)
    b = parse_poly("[1,1]x", gf4)
    c = parse_poly("t*x+x", gf4)
    assert a == b == c
    z6 = R("Z6")
    assert parse_poly("x^2-x", z6) == parse_poly("x^2+5x", z6)
    assert parse_poly("-1", z6) == Polynomial.constant(z6, 5)
    prod = R("Z2xZ3")
    assert parse_poly("(1,2)*x^2+(0,1)", prod).codes == (1, 0, 5)


def test_parse_element(R):
    u = R("Z2[x]/(x^3+x^4)")
    assert parse_element("t^3", u) == u.generator**3
    assert parse_element("t^5", u) == u.generator**5
    assert str(parse_element("(1+t^2)", u)) == "t^2+1"


def test_coefficient_out_of_ring(R):
    with pytest.raises(CoefficientOutOfRing):
        parse_poly("[1,2]x", R("GF(4)"))
    with pytest.raises(CoefficientOutOfRing):
        parse_poly("t*x", R("Z6"))
    with pytest.raises(CoefficientOutOfRing):
        parse_poly("(1,2,3)x", R("Z2xZ3"))


@pytest.mark.parametrize("text, offset", [("x^^2", 2), ("x+", 2), ("2**x", 2)])
def test_poly_parse_errors(R, text, offset):
    with pytest.raises(ParseError) as info:
        parse_poly(text, R("Z6"))
    assert info.value.offset == offset


RINGS = [build_ring(s) for s in base_specs(16) + product_specs(16)]


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_poly_print_parse_roundtrip(data):
    ring = data.draw(st.sampled_from(RINGS))
    codes = data.draw(st.lists(st.integers(0, ring.order - 1), max_size=6))
    F = Polynomial.from_codes(ring, codes)
    assert parse_poly(str(F), ring) == F
