"""Acceptance checks, replayable from the CLI (``ringforge verify``) and the
test suite.

Every check returns a :class:`Check` with a pass flag and a short detail
line; none of them raise on failure.
"""

from __future__ import annotations

import itertools
import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from .corpus import builtin_rings, char2_specs, constructible_specs
from .errors import NotVanishing
from .poly import Polynomial, divrem
from .rings import Gf, Product, Quot, Zn, build_ring, default_modulus, verify_ring_axioms
from .roots import (
    achievable_nonroot_counts,
    brute_force_root_counts,
    count_roots,
    feasible_root_counts_squarefree,
)
from .snumber import bound_n, check_eq1_identity, z2_quotient_ring, s_of_ring, s_subring, validate_result
from .vanishing import (
    field_generator,
    find_nonroot,
    generator_quotient,
    is_vanishing,
    is_vanishing_batch,
    zn_vanishing_criterion,
    zp_x2_criterion,
    zp_x2_criterion_batch,
)
from .parsing import parse_poly
from ._search import digit_block

DEFAULT_SEED = 20240229


@dataclass
class Check:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.key:>4} {self.title}: {self.detail} ({self.seconds:.2f}s)"


def _timed(key, title, fn, *args):
    t0 = time.perf_counter()
    passed, detail = fn(*args)
    return Check(key, title, bool(passed), detail, time.perf_counter() - t0)


# 1 ---------------------------------------------------------------------------


def _c1():
    t0 = time.perf_counter()
    results = {a: check_eq1_identity(a) for a in range(3, 9)}
    dt = time.perf_counter() - t0
    ok = all(results.values()) and dt < 1.0
    return ok, f"vanishes for a=3..8: {results}; {dt:.3f}s (limit 1s)"


# 2 ---------------------------------------------------------------------------


def _z2_quotient_s(a, max_m=8):
    R = z2_quotient_ring(a)
    res = s_of_ring(R, max_m=max_m)
    valid = validate_result(R, res)
    return res, valid


def _c2(a):
    t0 = time.perf_counter()
    res, valid = _z2_quotient_s(a)
    dt = time.perf_counter() - t0
    transcript = "; ".join(
        f"m={m}: {n} tuples, {'witness' if f else 'none'}" for m, n, f in res.transcript
    )
    ok = res.value == 4 and valid and dt < 60
    detail = (
        f"s(Z2[x]/(x^{a}+x^{a + 1})) = {res.value}, expected 4; witness {res.witness} "
        f"(valid={valid}); transcript [{transcript}]"
    )
    return ok, detail


# 3 ---------------------------------------------------------------------------


def _c3():
    t0 = time.perf_counter()
    got = {}
    for p in (2, 3, 5, 7):
        R = build_ring(Zn(p))
        res = s_of_ring(R, max_m=p + 1)
        got[p] = res.value if validate_result(R, res) else None
    dt = time.perf_counter() - t0
    return all(got[p] == p for p in got) and dt < 30, f"s(Z_p) = {got}; {dt:.2f}s (limit 30s)"


# 4 ---------------------------------------------------------------------------


def _dual_exhaustive(p, max_deg):
    R = build_ring(Quot(p, (0, 0, 1)))
    total = R.order ** (max_deg + 1)
    agree = 0
    for s in range(0, total, 1 << 15):
        rows = digit_block(R.order, max_deg + 1, s, min(total, s + (1 << 15)))
        agree += int((is_vanishing_batch(R, rows) == zp_x2_criterion_batch(R, rows)).sum())
    return agree, total


def _dual_samples(p, n, rng):
    """Half uniform, half of the form J + t*K with J, K multiples of y^p - y
    (so vanishing and non-vanishing cases both occur)."""
    R = build_ring(Quot(p, (0, 0, 1)))
    zp = build_ring(Zn(p))
    max_deg = 2 * p
    vp = Polynomial.from_codes(zp, [0, p - 1] + [0] * (p - 2) + [1])
    rows = []
    for i in range(n):
        if i % 2 == 0:
            rows.append(rng.integers(0, R.order, max_deg + 1))
            continue
        A = Polynomial.from_codes(zp, rng.integers(0, p, rng.integers(1, p + 1)).tolist())
        B = Polynomial.from_codes(zp, rng.integers(0, p, rng.integers(1, p + 1)).tolist())
        J, K = (A * vp).codes, (B * vp).codes
        row = np.zeros(max_deg + 1, dtype=np.int64)
        row[: len(J)] += np.asarray(J, dtype=np.int64)
        row[: len(K)] += p * np.asarray(K, dtype=np.int64)
        rows.append(row)
    rows = np.array(rows)
    both = is_vanishing_batch(R, rows)
    crit = zp_x2_criterion_batch(R, rows)
    return int((both == crit).sum()), n, int(both.sum())


def _c4(seed):
    rng = np.random.default_rng(seed)
    agree, total = _dual_exhaustive(2, 4)
    parts = [f"p=2 exhaustive deg<=4: {agree}/{total}"]
    ok = agree == total
    for p in (3, 5):
        a, n, nv = _dual_samples(p, 10_000, rng)
        ok &= a == n
        parts.append(f"p={p}: {a}/{n} samples ({nv} vanishing)")
    return ok, "; ".join(parts)


# 5 ---------------------------------------------------------------------------


def _c5():
    R = build_ring(Quot(2, (0, 0, 1)))
    g1 = parse_poly("t*x^2+t*x", R)
    g2 = parse_poly("x^4+x^2", R)
    g3 = parse_poly("x^2+x", R)
    w = find_nonroot(g3)
    t = R.generator
    ok = (
        is_vanishing(g1)
        and zp_x2_criterion(g1)
        and is_vanishing(g2)
        and zp_x2_criterion(g2)
        and not is_vanishing(g3)
        and not zp_x2_criterion(g3)
        and w is not None
        and w[0] == t
        and w[1] == t
        and g3(t) == t
    )
    return ok, f"xy(y+1) vanishes, y^4+y^2 vanishes, y(y+1) fails at {w[0]} with value {w[1]}"


# 6 ---------------------------------------------------------------------------


def _random_poly(R, rng, max_deg, nonzero=False):
    while True:
        deg = int(rng.integers(0, max_deg + 1))
        P = Polynomial.from_codes(R, rng.integers(0, R.order, deg + 1).tolist())
        if P or not nonzero:
            return P


def _c6(seed):
    rng = np.random.default_rng(seed)
    ok = True
    parts = []
    for p in (2, 3, 5):
        R = build_ring(Gf(p, 2, default_modulus(p, 2)))
        q = R.order
        V = field_generator(R)
        expected = Polynomial.monomial(R, q) - Polynomial.x(R)
        gen_ok = V == expected
        recon = 0
        for _ in range(1000):
            F = _random_poly(R, rng, 3, nonzero=True)
            G = F * V
            try:
                Q = generator_quotient(G)
            except NotVanishing:
                continue
            recon += is_vanishing(G) and Q == F and Q * V == G and divrem(G, V)[1].is_zero()
        nonmult = 0
        nonmult_ok = 0
        for _ in range(1000):
            G = _random_poly(R, rng, q + 3)
            if not divrem(G, V)[1].is_zero():
                nonmult += 1
                nonmult_ok += not is_vanishing(G)
        ok &= gen_ok and recon == 1000 and nonmult_ok == nonmult
        parts.append(
            f"GF({q}): V=x^{q}-x {gen_ok}, {recon}/1000 reconstructed, "
            f"{nonmult_ok}/{nonmult} non-multiples non-vanishing"
        )
    return ok, "; ".join(parts)


# 7 ---------------------------------------------------------------------------


def _zn_biased(n, rng, max_deg):
    """Coefficients built in the falling-factorial basis so that vanishing
    cases are common, then converted back to the monomial basis."""
    R = build_ring(Zn(n))
    x = Polynomial.x(R)
    out = Polynomial.from_codes(R, ())
    ff = Polynomial.constant(R, 1)
    deg = int(rng.integers(0, max_deg + 1))
    for k in range(deg + 1):
        step = n // math.gcd(n, math.factorial(k))
        if rng.random() < 0.85:
            c = step * int(rng.integers(0, n))
        else:
            c = int(rng.integers(0, n))
        out = out + ff.scale(c)
        ff = ff * (x - k)
    return out


def zn_corpus(seed, samples=10_000):
    """(exhaustive n<=6 deg<=4 list, sampled n<=30 deg<=8 list)."""
    rng = np.random.default_rng(seed)
    exhaustive = []
    for n in range(2, 7):
        R = build_ring(Zn(n))
        for c in itertools.product(range(n), repeat=5):
            exhaustive.append(Polynomial.from_codes(R, c))
    sampled = []
    for i in range(samples):
        n = int(rng.integers(2, 31))
        if i % 2:
            sampled.append(_zn_biased(n, rng, 8))
        else:
            R = build_ring(Zn(n))
            sampled.append(_random_poly(R, rng, 8))
    return exhaustive, sampled


def _c7(seed):
    exhaustive, sampled = zn_corpus(seed)
    e_ok = sum(zn_vanishing_criterion(F)[0] == is_vanishing(F) for F in exhaustive)
    s_ok = sum(zn_vanishing_criterion(F)[0] == is_vanishing(F) for F in sampled)
    nv = sum(is_vanishing(F) for F in sampled)
    return (
        e_ok == len(exhaustive) and s_ok == len(sampled),
        f"exhaustive {e_ok}/{len(exhaustive)}; sampled {s_ok}/{len(sampled)} ({nv} vanishing)",
    )


# 8 ---------------------------------------------------------------------------


def _c8():
    t0 = time.perf_counter()
    brute = brute_force_root_counts(build_ring(Zn(6)))
    formula = feasible_root_counts_squarefree(6)
    dt = time.perf_counter() - t0
    want = {0, 1, 2, 3, 4, 6}
    ok = brute.achievable_counts == want == formula.achievable_counts and dt < 1.0
    return ok, (
        f"brute {sorted(brute.achievable_counts)}, formula {sorted(formula.achievable_counts)}, "
        f"unachievable {sorted(brute.unachievable)}; {dt:.3f}s (limit 1s)"
    )


# 9 ---------------------------------------------------------------------------


def _componentwise_nonroots(factors):
    """Independent enumeration: every tuple of component functions (all
    functions on each field factor), root count of the product function."""
    rings = [build_ring(f) for f in factors]
    per = []
    for R in rings:
        zero_counts = set()
        for values in itertools.product(range(R.order), repeat=R.order):
            zero_counts.add(sum(v == 0 for v in values))
        per.append(sorted(zero_counts))
    n = math.prod(R.order for R in rings)
    return {n - math.prod(z) for z in itertools.product(*per)}


def _c9():
    ok = True
    parts = []
    for factors in ((Zn(2), Zn(2)), (Zn(2), Zn(3)), (Zn(3), Zn(3))):
        R = build_ring(Product(factors))
        brute = brute_force_root_counts(R)
        orders = [build_ring(f).order for f in factors]
        per = [
            {build_ring(f).order - c for c in brute_force_root_counts(build_ring(f)).achievable_counts}
            for f in factors
        ]
        formula = achievable_nonroot_counts(orders, per)
        enum = _componentwise_nonroots(factors)
        match = formula == brute.achievable_nonroot_counts == enum
        ok &= match
        parts.append(f"Z{orders[0]}xZ{orders[1]}: {sorted(formula)} {'==' if match else '!='} brute")
    z6 = achievable_nonroot_counts((3, 2), [range(4), range(3)])
    z6_ok = z6 == {0, 2, 3, 4, 5, 6} and 1 not in z6
    ok &= z6_ok
    parts.append(f"Z6 instance {sorted(z6)}")
    return ok, "; ".join(parts)


# 10 --------------------------------------------------------------------------


def _c10():
    rings = 0
    checked = 0
    for spec in builtin_rings(36):
        R = build_ring(spec)
        rings += 1
        for a in range(R.order):
            F = Polynomial.from_codes(R, [0, a])
            _, roots = count_roots(F)
            if [r.code for r in roots] != R.annihilator_codes(a).tolist():
                return False, f"mismatch in {R} at {R.format_element(a)}"
            checked += 1
    return True, f"{checked} elements across {rings} rings"


# 11 --------------------------------------------------------------------------


def ideal_closure(exhaustive, rng, h_samples=4):
    """Sums and sampled multiples of vanishing polynomials stay vanishing."""
    by_ring = {}
    for F in exhaustive:
        if is_vanishing(F):
            by_ring.setdefault(F.ring, []).append(F)
    checked = 0
    for R, vs in by_ring.items():
        for F, G in itertools.combinations_with_replacement(vs, 2):
            if not is_vanishing(F + G):
                return False, checked
            checked += 1
        for F in vs:
            for _ in range(h_samples):
                H = _random_poly(R, rng, 3)
                if not is_vanishing(H * F):
                    return False, checked
                checked += 1
    return True, checked


def _c11(seed):
    specs = constructible_specs(64)
    for spec in specs:
        rep = verify_ring_axioms(build_ring(spec))
        if not rep.passed:
            return False, f"{spec}: {rep}"
    exhaustive, _ = zn_corpus(seed, samples=0)
    ok, n = ideal_closure(exhaustive, np.random.default_rng(seed))
    return ok, f"axioms pass on {len(specs)} specs; ideal closure {'holds' if ok else 'FAILS'} on {n} cases"


# 12 --------------------------------------------------------------------------


def _c12a():
    specs = char2_specs(16)
    bad = []
    named = {}
    for spec in specs:
        R = build_ring(spec)
        lin = s_subring(R, method="linear")
        ex = s_subring(R, method="exhaustive")
        if lin.value != ex.value or not validate_result(R, lin) or not validate_result(R, ex):
            bad.append(str(R))
        named[str(R)] = lin.value
    gf4 = named.get("Ring(GF(4))")
    dual = named.get("Ring(Z2[x]/(x^2))")
    ok = not bad and gf4 == 4 and dual == 4
    return ok, f"{len(specs)} char-2 rings agree ({'none' if not bad else bad} differ); GF(4) -> {gf4}, Z2[x]/(x^2) -> {dual}"


def _c12b():
    n = bound_n(4)
    return n == 24**16384, "bound_n(4) == 24^16384"


def _c12c():
    limit = sys.get_int_max_str_digits() if hasattr(sys, "get_int_max_str_digits") else None
    if limit is not None:
        sys.set_int_max_str_digits(0)
    try:
        digits = len(str(bound_n(4)))
    finally:
        if limit is not None:
            sys.set_int_max_str_digits(limit)
    return abs(digits - 22605) <= 1, f"bound_n(4) has {digits} digits, expected 22605 +/- 1"


CRITERIA = [
    ("1", "quartic identity over Z_2[x]/(x^a+x^(a+1))", lambda seed: _c1()),
    ("2a", "s(Z_2[x]/(x^3+x^4)) = 4", lambda seed: _c2(3)),
    ("2b", "s(Z_2[x]/(x^4+x^5)) = 4", lambda seed: _c2(4)),
    ("3", "s(Z_p) = p", lambda seed: _c3()),
    ("4", "Z_p[x]/(x^2) J/K/J' criterion", _c4),
    ("5", "worked examples over Z_2[x]/(x^2)", lambda seed: _c5()),
    ("6", "GF(p^2) generator and quotient", _c6),
    ("7", "Z_n falling-factorial criterion", _c7),
    ("8", "Z_6 root atlas", lambda seed: _c8()),
    ("9", "non-root formula vs enumeration", lambda seed: _c9()),
    ("10", "roots of a*x = Ann(a)", lambda seed: _c10()),
    ("11", "ring axioms and ideal closure", _c11),
    ("12a", "s(R';R) linear algebra vs exhaustive", lambda seed: _c12a()),
    ("12b", "bound_n(4) exact", lambda seed: _c12b()),
    ("12c", "bound_n(4) digit count", lambda seed: _c12c()),
]


def run_criterion(key: str, seed: int = DEFAULT_SEED) -> Check:
    for k, title, fn in CRITERIA:
        if k == key:
            return _timed(k, title, fn, seed)
    raise KeyError(key)


def run_all(seed: int = DEFAULT_SEED):
    for k, title, fn in CRITERIA:
        yield _timed(k, title, fn, seed)
