"""Vanishing polynomials: polynomials that evaluate to zero at every element.

Besides the exhaustive test this module carries three structural criteria,
each of which must agree with the exhaustive one:

* over ``Z_n``, the falling-factorial criterion ``n | c_k·k!``;
* over a finite field ``F_q``, divisibility by ``V = prod (x - f)`` over all
  elements, which equals ``x^q - x``;
* over ``Z_p[t]/(t^2)``, writing ``G = J + t·K`` with ``J, K`` over ``Z_p``,
  ``G`` vanishes iff ``J``, ``K`` and ``J'`` all vanish over ``Z_p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._search import CHUNK, digit_block, row_keys
from .errors import BudgetExceeded, NotAField, NotFoundWithin, NotVanishing, WrongRingShape
from .poly import Polynomial, divrem, from_roots, function_tables
from .rings import Element, PolyQuotientRing, Ring, Zn, ZnRing, build_ring

__all__ = [
    "Jksplit",
    "is_vanishing",
    "is_vanishing_batch",
    "find_nonroot",
    "zn_vanishing_criterion",
    "falling_factorial_coeffs",
    "field_generator",
    "generator_quotient",
    "zp_x2_split",
    "zp_x2_criterion",
    "zp_x2_criterion_batch",
    "minimal_monic_vanishing_degree",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 1 << 28


def is_vanishing_batch(ring: Ring, coeffs) -> np.ndarray:
    """``out[i]`` is True iff the polynomial with code row ``coeffs[i]`` vanishes."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if coeffs.ndim == 1:
        coeffs = coeffs[None, :]
    out = np.empty(len(coeffs), dtype=bool)
    for s in range(0, len(coeffs), CHUNK):
        out[s : s + CHUNK] = ~function_tables(ring, coeffs[s : s + CHUNK]).any(axis=1)
    return out


def is_vanishing(F: Polynomial) -> bool:
    if F.is_zero():
        return True
    return bool(is_vanishing_batch(F.ring, F.codes)[0])


def find_nonroot(F: Polynomial):
    """First element (canonical order) where F is nonzero, with the value there,
    or ``None`` if F vanishes."""
    if F.is_zero():
        return None
    table = function_tables(F.ring, F.codes)[0]
    hits = np.flatnonzero(table)
    if not len(hits):
        return None
    a = int(hits[0])
    return Element(F.ring, a), Element(F.ring, int(table[a]))


# --- Z_n --------------------------------------------------------------------


def falling_factorial_coeffs(coeffs, n: int) -> list:
    """Rewrite ``sum a_i x^i`` (constant first) as ``sum c_k (x)_k`` mod n by
    repeated synthetic division by ``x - k``."""
    cur = [int(a) % n for a in coeffs]
    while cur and cur[-1] == 0:
        cur.pop()
    out = []
    k = 0
    while cur:
        quot = [0] * (len(cur) - 1)
        acc = 0
        for i in range(len(cur) - 1, -1, -1):
            acc = (acc * k + cur[i]) % n
            if i:
                quot[i - 1] = acc
        out.append(acc)
        while quot and quot[-1] == 0:
            quot.pop()
        cur = quot
        k += 1
    return out


def zn_vanishing_criterion(F: Polynomial):
    """``(vanishes, c)`` where ``c`` are the falling-factorial coefficients and
    F vanishes iff n divides ``c_k·k!`` for every k."""
    ring = F.ring
    if not isinstance(ring, ZnRing):
        raise WrongRingShape(f"{ring} is not Z_n")
    n = ring.n
    c = falling_factorial_coeffs(F.codes, n)
    ok = all(ck * math.factorial(k) % n == 0 for k, ck in enumerate(c))
    return ok, c


# --- finite fields ----------------------------------------------------------


def field_generator(ring: Ring) -> Polynomial:
    """``V = prod (x - f)`` over every element f of a finite field."""
    if not ring.is_field():
        raise NotAField(f"{ring} has zero divisors")
    return from_roots(ring, ring.elements())


def generator_quotient(G: Polynomial) -> Polynomial:
    """The unique F with ``G = F·V``; raises NotVanishing if V does not divide G."""
    V = field_generator(G.ring)
    q, r = divrem(G, V)
    if not r.is_zero():
        raise NotVanishing(f"{G} leaves remainder {r} modulo {V}")
    return q


# --- Z_p[t]/(t^2) -----------------------------------------------------------


@dataclass(frozen=True)
class Jksplit:
    """``G = J + t·K`` with J and K over Z_p."""

    J: Polynomial
    K: Polynomial


def _check_dual(ring: Ring) -> int:
    if not (isinstance(ring, PolyQuotientRing) and ring.modulus == (0, 0, 1)):
        raise WrongRingShape(f"{ring} is not Z_p[x]/(x^2)")
    return ring.p


def zp_x2_split(G: Polynomial) -> Jksplit:
    p = _check_dual(G.ring)
    zp = build_ring(Zn(p))
    return Jksplit(
        Polynomial.from_codes(zp, [c % p for c in G.codes]),
        Polynomial.from_codes(zp, [c // p for c in G.codes]),
    )


def zp_x2_criterion_batch(ring: Ring, coeffs) -> np.ndarray:
    """Vectorized J/K/J' criterion over rows of coefficient codes."""
    p = _check_dual(ring)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if coeffs.ndim == 1:
        coeffs = coeffs[None, :]
    zp = build_ring(Zn(p))
    J = coeffs % p
    K = coeffs // p
    Jd = (J[:, 1:] * np.arange(1, J.shape[1], dtype=np.int64)) % p
    out = is_vanishing_batch(zp, J) & is_vanishing_batch(zp, K)
    if Jd.shape[1]:
        out &= is_vanishing_batch(zp, Jd)
    return out


def zp_x2_criterion(G: Polynomial) -> bool:
    """True iff J, K and J' (from ``G = J + t·K``) all vanish over Z_p."""
    _check_dual(G.ring)
    if G.is_zero():
        return True
    return bool(zp_x2_criterion_batch(G.ring, G.codes)[0])


# --- minimal monic vanishing degree ------------------------------------------


def minimal_monic_vanishing_degree(ring: Ring, budget: int = DEFAULT_BUDGET, max_m: int = 64):
    """Smallest m with a monic vanishing polynomial of degree m, and one such
    polynomial.

    For each m the search looks for ``c_1..c_{m-1}`` with
    ``sum c_i r^i = -r^m`` for every r (``c_0`` is forced to 0 by r = 0),
    meeting in the middle: tables of the low half of the coefficients are
    hashed, and each high-half combination looks up the table it needs.
    """
    n = ring.order
    allc = ring.codes()
    powers = [ring.pow_codes(allc, i) for i in range(max_m + 1)]
    for m in range(1, max_m + 1):
        free = m - 1
        if n**free > budget:
            raise BudgetExceeded(
                f"{n}^{free} coefficient tuples exceed budget {budget} at degree {m}",
                excluded_up_to=m - 1,
            )
        target = np.asarray(ring.neg_codes(powers[m]), dtype=np.int64)
        found = _meet_in_middle(ring, powers, target, free)
        if found is not None:
            codes = [0] + list(found) + [ring.one_code]
            return m, Polynomial.from_codes(ring, codes)
    raise NotFoundWithin(f"no monic vanishing polynomial of degree <= {max_m}", max_m)


def _half_tables(ring, powers, positions, start, stop):
    digits = digit_block(ring.order, len(positions), start, stop)
    acc = np.zeros((len(digits), ring.order), dtype=np.int64)
    for j, pos in enumerate(positions):
        acc = ring.add_codes(acc, ring.mul_codes(digits[:, j : j + 1], powers[pos][None, :]))
    return digits, np.asarray(acc, dtype=np.int64)


def _meet_in_middle(ring, powers, target, free):
    n = ring.order
    low = list(range(1, 1 + free // 2))
    high = list(range(1 + free // 2, free + 1))
    low_digits, low_tabs = _half_tables(ring, powers, low, 0, n ** len(low))
    index = {}
    for i, key in enumerate(row_keys(low_tabs)):
        index.setdefault(key.tobytes(), i)
    total = n ** len(high)
    for s in range(0, total, CHUNK):
        hd, htabs = _half_tables(ring, powers, high, s, min(total, s + CHUNK))
        need = np.asarray(ring.sub_codes(target[None, :], htabs), dtype=np.int64)
        for j, key in enumerate(row_keys(need)):
            i = index.get(key.tobytes())
            if i is not None:
                return list(low_digits[i]) + list(hd[j])
    return None
