import itertools

import pytest

from ringforge import BudgetExceeded, InvalidA, NotFoundWithin, TooLarge, build_ring, Zn
from ringforge.corpus import base_specs, char2_specs, product_specs
from ringforge.poly import function_table
from ringforge.snumber import (
    bound_n,
    check_eq1_identity,
    eq1_polynomial,
    power_table,
    s_of_ring,
    s_subring,
    validate_result,
    z2_quotient_ring,
)


def test_power_table_examples(R):
    assert power_table(R("Z2"), 2).values == [0, 1]
    assert power_table(R("Z4"), 2).values == [0, 1, 0, 1]
    assert power_table(R("Z3"), 3).values == [0, 1, 2]
    assert power_table(R("Z5"), 0).values == [1] * 5


def test_s_examples(R):
    res = s_of_ring(R("Z2"))
    assert res.value == 2 and str(res.witness) == "x"
    assert s_of_ring(R("Z5")).value == 5


def _naive_s(ring, max_m):
    """Plain-Python search over every coefficient tuple, no pruning."""
    elems = list(range(ring.order))
    mul, add = ring.mul_table.tolist(), ring.add_table.tolist()

    def pw(a, e):
        r = ring.one_code
        for _ in range(e):
            r = mul[r][a]
        return r

    powers = [[pw(a, e) for a in elems] for e in range(max_m + 1)]
    for m in range(1, max_m + 1):
        for coeffs in itertools.product(elems, repeat=m):
            ok = True
            for a in elems:
                v = 0
                for i, c in enumerate(coeffs):
                    v = add[v][mul[c][powers[i][a]]]
                if v != powers[m][a]:
                    ok = False
                    break
            if ok:
                return m
    return None


@pytest.mark.parametrize("text", ["Z2", "Z3", "Z4", "Z6", "Z2xZ2", "GF(4)", "Z2[x]/(x^2)", "Z2[x]/(x^2+x)", "Z8"])
def test_s_against_naive_oracle(R, text):
    ring = R(text)
    assert s_of_ring(ring).value == _naive_s(ring, 8)


def test_s_z2_quotient_a3():
    ring = z2_quotient_ring(3)
    res = s_of_ring(ring, max_m=8)
    assert res.value == 4
    assert validate_result(ring, res)
    # c_0 is forced to 0, so degree < m leaves 16^(m-1) tuples; the last
    # row stops at the first witness
    assert res.transcript[:3] == [(1, 1, False), (2, 16, False), (3, 256, False)]
    m, examined, found = res.transcript[3]
    assert m == 4 and found and examined <= 4096


def test_s_errors(R):
    with pytest.raises(NotFoundWithin):
        s_of_ring(R("Z7"), max_m=3)
    with pytest.raises(BudgetExceeded):
        s_of_ring(R("Z13"), budget=10**4)


@pytest.mark.parametrize("a", [3, 4, 5, 8])
def test_eq1_identity(a):
    assert check_eq1_identity(a)
    Q = eq1_polynomial(a)
    assert Q.degree == 4


def test_eq1_leading_coefficient_is_unit_only_for_a3():
    assert eq1_polynomial(3).is_monic()
    for a in (4, 5, 6):
        assert not eq1_polynomial(a).is_monic()


def test_eq1_invalid():
    with pytest.raises(InvalidA):
        check_eq1_identity(2)


def test_bound_n():
    assert bound_n(1) == 1
    assert bound_n(2) == 2**32 == 4294967296
    assert bound_n(3) == 6 ** (6**3 * 3)
    assert bound_n(4) == 24 ** (2**14)
    with pytest.raises(TooLarge):
        bound_n(6)
    with pytest.raises(ValueError):
        bound_n(0)


@pytest.mark.parametrize("text, want", [("Z2", 2), ("GF(4)", 4), ("Z2[x]/(x^2)", 4), ("Z3", 3), ("GF(9)", 9)])
def test_s_subring_examples(R, text, want):
    ring = R(text)
    lin = s_subring(ring, method="linear")
    assert lin.value == want and lin.method == "prime-field-linear-algebra"
    assert validate_result(ring, lin)
    if want <= 4:
        assert s_subring(ring, method="exhaustive").value == want


def test_s_subring_at_least_s():
    for spec in base_specs(16) + product_specs(16):
        ring = build_ring(spec)
        try:
            s = s_of_ring(ring, budget=1 << 20).value
        except BudgetExceeded:
            continue
        sub = s_subring(ring, max_m=64)
        assert sub.value >= s, spec
        assert validate_result(ring, sub)


def test_s_subring_paths_agree_char2():
    specs = char2_specs(16)
    assert len(specs) >= 30
    for spec in specs:
        ring = build_ring(spec)
        assert s_subring(ring, method="linear").value == s_subring(ring, method="exhaustive").value


def test_s_subring_non_prime_char_uses_exhaustive(R):
    ring = R("Z4")
    res = s_subring(ring)
    assert res.method == "exhaustive"
    assert res.value == s_of_ring(ring).value == 4


def test_validate_result_rejects_tampering(R):
    ring = R("Z6")
    res = s_of_ring(ring)
    assert validate_result(ring, res)
    res.value += 1
    assert not validate_result(ring, res)


def test_witness_table_matches_power_table():
    for n in range(2, 9):
        ring = build_ring(Zn(n))
        res = s_of_ring(ring)
        assert function_table(res.witness) == power_table(ring, res.value)
        assert res.witness.is_zero() or res.witness.degree < res.value
