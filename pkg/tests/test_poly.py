import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge import (
    Element,
    NonMonicDivisor,
    NotAProduct,
    Polynomial,
    build_ring,
    decompose_over_product,
    divrem,
    eval_poly,
    formal_derivative,
    from_roots,
    function_table,
    parse_poly,
    poly_arith,
    recombine,
)
from ringforge.corpus import base_specs, product_specs

SMALL = [build_ring(s) for s in base_specs(16) + product_specs(16)]


@st.composite
def ring_and_polys(draw, count=2, max_deg=6):
    ring = draw(st.sampled_from(SMALL))
    code = st.integers(0, ring.order - 1)
    polys = [
        Polynomial.from_codes(ring, draw(st.lists(code, max_size=max_deg + 1)))
        for _ in range(count)
    ]
    return ring, polys


def test_eval_examples(R):
    z6 = R("Z6")
    assert eval_poly(parse_poly("x^2+x", z6), 3) == z6(0)
    gf4 = R("GF(4)")
    t = gf4.generator
    assert eval_poly(parse_poly("x^4+x", gf4), t) == gf4(0)
    z4 = R("Z4")
    assert eval_poly(parse_poly("2x", z4), 2) == z4(0)


def test_poly_arith_examples(R):
    z2 = R("Z2")
    x = Polynomial.x(z2)
    assert poly_arith("mul", x + 1, x + 1) == x**2 + 1
    z6 = R("Z6")
    y = Polynomial.x(z6)
    assert poly_arith("add", y * 3, y * 3).is_zero()
    assert poly_arith("scale", y + 1, z6(2)) == y * 2 + 2
    assert poly_arith("neg", y + 1) == y * 5 + 5


def test_derivative_examples(R):
    z2 = R("Z2")
    assert formal_derivative(parse_poly("x^2", z2)).is_zero()
    z3 = R("Z3")
    assert formal_derivative(parse_poly("x^3+2x", z3)) == Polynomial.constant(z3, 2)
    u = R("Z2[x]/(x^2)")
    assert str(formal_derivative(parse_poly("t*x^3+x", u))) == "t*x^2+1"


def test_function_table_examples(R):
    assert function_table(parse_poly("x^2", R("Z4"))).values == [0, 1, 0, 1]
    assert function_table(parse_poly("x^3", R("Z3"))).values == [0, 1, 2]
    assert function_table(Polynomial(R("Z5"), [])).values == [0] * 5


def test_divrem_example(R):
    z2 = R("Z2")
    x = Polynomial.x(z2)
    q, r = divrem(x**3, x**2 + x)
    assert (q, r) == (x + 1, x)


def test_divrem_non_monic(R):
    z4 = R("Z4")
    x = Polynomial.x(z4)
    with pytest.raises(NonMonicDivisor):
        divrem(x**3, x * 2 + 1)
    with pytest.raises(NonMonicDivisor):
        divrem(x, Polynomial(z4, []))


def _gf4_mul(a, b):
    # codes are bit vectors c0 + 2*c1 over the modulus t^2 + t + 1
    r = 0
    for i in range(2):
        if (b >> i) & 1:
            r ^= a << i
    if r & 4:
        r ^= 0b111
    return r


def test_from_roots_gf4(R):
    """Product of (x - r) over GF(4), expanded by an independent GF(4) multiply."""
    gf4 = R("GF(4)")
    coeffs = [1]
    for r in range(4):
        # multiply by (x + r); characteristic 2 so -r = r
        out = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            out[i + 1] ^= c
            out[i] ^= _gf4_mul(c, r)
        coeffs = out
    assert coeffs == [0, 1, 0, 0, 1]
    F = from_roots(gf4, list(gf4.elements()))
    assert list(F.codes) == coeffs
    assert str(F) == "x^4+x"


def test_from_roots_vanishes_at_roots():
    for ring in SMALL[:40]:
        roots = list(ring.elements())[: min(3, ring.order)]
        F = from_roots(ring, roots)
        assert F.is_monic() and F.degree == len(roots)
        assert all(F(r) == ring.zero for r in roots)


def test_decompose_example(R):
    prod = R("Z2xZ3")
    F = parse_poly("(1,2)*x+(1,0)", prod)
    F1, F2 = decompose_over_product(F)
    assert str(F1) == "x+1" and str(F2) == "2x"
    assert recombine(prod, [F1, F2]) == F


def test_decompose_not_product(R):
    with pytest.raises(NotAProduct):
        decompose_over_product(parse_poly("x", R("Z6")))


@settings(max_examples=150, deadline=None)
@given(ring_and_polys())
def test_evaluation_is_homomorphism(data):
    ring, (F, G) = data
    for a in ring.elements():
        assert (F + G)(a) == F(a) + G(a)
        assert (F * G)(a) == F(a) * G(a)
        assert (-F)(a) == -F(a)


@settings(max_examples=150, deadline=None)
@given(ring_and_polys())
def test_derivative_rules(data):
    ring, (F, G) = data
    D = formal_derivative
    assert D(F + G) == D(F) + D(G)
    assert D(F * G) == D(F) * G + F * D(G)


@settings(max_examples=150, deadline=None)
@given(ring_and_polys(count=3))
def test_divrem_reconstructs(data):
    ring, (F, G, _) = data
    G = G + Polynomial.monomial(ring, (G.degree or 0) + 1)
    q, r = divrem(F, G)
    assert q * G + r == F
    assert r.is_zero() or r.degree < G.degree


def test_divrem_uniqueness_exhaustive(R):
    """Over Z4, every (q, r) with q*G + r = F and deg r < deg G is the returned pair."""
    z4 = R("Z4")
    G = parse_poly("x^2+2x+3", z4)
    for fc in itertools.product(range(4), repeat=4):
        F = Polynomial.from_codes(z4, fc)
        q, r = divrem(F, G)
        pairs = []
        for qc in itertools.product(range(4), repeat=2):
            Q = Polynomial.from_codes(z4, qc)
            rem = F - Q * G
            if rem.is_zero() or rem.degree < 2:
                pairs.append((Q, rem))
        assert pairs == [(q, r)]


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_decompose_recombine_roundtrip(data):
    prods = [r for r in SMALL if hasattr(r, "factors")]
    ring = data.draw(st.sampled_from(prods))
    codes = data.draw(st.lists(st.integers(0, ring.order - 1), max_size=6))
    F = Polynomial.from_codes(ring, codes)
    parts = decompose_over_product(F)
    assert recombine(ring, parts) == F
    for a in ring.elements():
        comps = ring.split(a.code)
        vals = ring.split(F(a).code)
        for P, c, v in zip(parts, comps, vals):
            assert P(Element(P.ring, int(c))).code == int(v)


def test_decompose_splits_into_constant_and_x(R):
    prod = R("Z2xZ2")
    F = parse_poly("(0,1)*x+(1,0)", prod)
    F1, F2 = decompose_over_product(F)
    assert F1 == Polynomial.constant(F1.ring, 1)
    assert F2 == Polynomial.x(F2.ring)
