import itertools

import numpy as np
import pytest

from ringforge import (
    EmptyProduct,
    Gf,
    NotPrime,
    Product,
    Quot,
    ReducibleModulus,
    RingMismatch,
    TooLarge,
    ZeroRing,
    Zn,
    annihilator,
    arith,
    build_ring,
    enumerate_elements,
    is_irreducible,
    prime_subring,
    verify_ring_axioms,
)
from ringforge.corpus import base_specs, product_specs
from ringforge.rings import verify_tables


def test_build_gf4():
    assert build_ring(Gf(2, 2, (1, 1, 1))).order == 4


@pytest.mark.parametrize(
    "spec, exc",
    [
        (Gf(2, 2, (1, 0, 1)), ReducibleModulus),
        (Zn(1), ZeroRing),
        (Zn(0), ZeroRing),
        (Product(()), EmptyProduct),
        (Quot(4, (0, 0, 1)), NotPrime),
        (Gf(6, 1, (0, 1)), NotPrime),
    ],
)
def test_build_errors(spec, exc):
    with pytest.raises(exc):
        build_ring(spec)


def test_build_is_cached_and_immutable():
    a = build_ring(Zn(6))
    assert a is build_ring(Zn(6))
    with pytest.raises(ValueError):
        a.mul_table[0, 0] = 1


def test_arith_examples(R):
    z6 = R("Z6")
    assert arith("add", z6(4), z6(5)) == z6(3)
    u = R("Z2[x]/(x^3+x^4)")
    t = u.generator
    assert arith("mul", t**3, t) == t**3
    gf4 = R("GF(4)")
    g = gf4.generator
    assert arith("mul", g, g) == gf4((1, 1))
    assert arith("neg", z6(2)) == z6(4)
    assert arith("sub", z6(1), z6(3)) == z6(4)


def test_arith_ring_mismatch(R):
    with pytest.raises(RingMismatch):
        arith("add", R("Z6")(1), R("Z3")(1))
    with pytest.raises(RingMismatch):
        R("Z6")(1) * R("Z2")(1)


def test_enumerate(R):
    assert [e.value for e in enumerate_elements(R("Z3"))] == [0, 1, 2]
    assert [str(e) for e in enumerate_elements(R("GF(4)"))] == ["0", "1", "t", "t+1"]
    assert [e.value for e in enumerate_elements(R("GF(4)"))] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    prod = enumerate_elements(R("Z2xZ3"))
    assert [e.value for e in prod] == list(itertools.product(range(2), range(3)))


def test_encode_decode_roundtrip():
    for spec in base_specs(16) + product_specs(16):
        ring = build_ring(spec)
        for e in ring.elements():
            assert ring(e.value) == e


def test_annihilator_examples(R):
    z6 = R("Z6")
    assert [a.value for a in annihilator(z6, 2)] == [0, 3]
    assert [a.value for a in annihilator(z6, 1)] == [0]
    assert [a.value for a in annihilator(R("Z4"), 2)] == [0, 2]


def test_prime_subring_examples(R):
    assert len(prime_subring(R("Z6"))) == 6
    assert [str(a) for a in prime_subring(R("GF(4)"))] == ["0", "1"]
    assert [str(a) for a in prime_subring(R("Z2[x]/(x^2)"))] == ["0", "1"]


@pytest.mark.parametrize(
    "f, p, expected",
    [((1, 1, 1), 2, True), ((1, 0, 1), 2, False), ((0, 0, 0, 1, 1), 2, False), ((1, 0, 1), 3, True), ((1, 1, 0, 1), 2, True)],
)
def test_is_irreducible(f, p, expected):
    assert is_irreducible(f, p) is expected


def test_is_irreducible_counts():
    # number of monic irreducibles of degree d over Z_p: (1/d) sum_{e|d} mu(e) p^(d/e)
    for p, d, want in [(2, 2, 1), (2, 3, 2), (2, 4, 3), (3, 2, 3), (2, 6, 9), (5, 2, 10)]:
        got = sum(
            is_irreducible(c + (1,), p) for c in itertools.product(range(p), repeat=d)
        )
        assert got == want


def test_axioms_examples(R):
    assert verify_ring_axioms(R("Z6")).passed
    assert verify_ring_axioms(R("GF(4)")).passed


def test_axioms_detect_fault(R):
    ring = R("Z6")
    mul = np.array(ring.mul_table)
    mul[2, 3] = 1
    report = verify_tables(ring.add_table, mul, 0, ring.one_code)
    assert not report.passed
    assert report.witness == (2, 3)
    # a symmetric corruption slips past commutativity but not associativity
    mul[3, 2] = 1
    report = verify_tables(ring.add_table, mul, 0, ring.one_code)
    assert not report.passed and len(report.witness) == 3
    i, j, k = report.witness
    assert mul[mul[i, j], k] != mul[i, mul[j, k]] or mul[i, ring.add_table[j, k]] != ring.add_table[
        mul[i, j], mul[i, k]
    ]


def test_axioms_too_large():
    with pytest.raises(TooLarge):
        verify_ring_axioms(build_ring(Zn(5000)))


def test_large_ring_direct_arithmetic():
    ring = build_ring(Quot(2, (1,) + (0,) * 12 + (1,)))  # order 8192, no tables
    assert ring.order == 8192 and ring.mul_table is None
    t = ring.generator
    assert t**13 == ring(1)  # t^13 = -1 = 1
    a, b = ring(7), t**5 + 1
    assert a * b == b * a


def test_small_corpus_axioms():
    for spec in base_specs(32) + product_specs(32):
        assert verify_ring_axioms(build_ring(spec)).passed, spec


def test_annihilator_is_ideal():
    for spec in base_specs(16) + product_specs(16):
        ring = build_ring(spec)
        for a in range(ring.order):
            ann = set(ring.annihilator_codes(a).tolist())
            assert 0 in ann
            for x, y in itertools.product(ann, repeat=2):
                assert ring.add_code(x, y) in ann
            for x in ann:
                for r in range(ring.order):
                    assert ring.mul_code(r, x) in ann


def test_prime_subring_size_and_closure():
    for spec in base_specs(64) + product_specs(36):
        ring = build_ring(spec)
        sub = ring.prime_subring_codes()
        assert len(sub) == ring.characteristic
        assert ring.order % ring.characteristic == 0
        s = set(sub)
        assert all(ring.add_code(a, b) in s and ring.mul_code(a, b) in s for a in sub for b in sub)


def test_product_arith_componentwise():
    for spec in product_specs(36):
        ring = build_ring(spec)
        allc = ring.codes()
        a, b = np.meshgrid(allc, allc, indexing="ij")
        for op in ("add_codes", "mul_codes"):
            whole = ring.split(getattr(ring, op)(a, b))
            for f, ca, cb, w in zip(ring.factors, ring.split(a), ring.split(b), whole):
                assert np.array_equal(getattr(f, op)(ca, cb), w)


def test_zero_divisor_pair(R):
    assert R("Z6").zero_divisor_pair() == (2, 3)
    assert R("GF(4)").zero_divisor_pair() is None
    assert R("GF(4)").is_field() and not R("Z4").is_field()


def test_element_ints_embed_as_multiples_of_one(R):
    ring = R("Z3xGF(4)")
    assert ring(2) == ring.one + ring.one
    assert ring(2).value == (2, (0, 0))
