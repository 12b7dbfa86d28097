"""The invariants s(R) and s(R';R).

``s(R)`` is the least m such that the power function ``r -> r^m`` is
induced by a polynomial of degree < m. ``s(R';R)`` adds the restriction
that the coefficients lie in the prime subring ``R'`` (the additive closure
of 1).

Two search paths:

* ``exhaustive``: coefficient tuples in lexicographic order, pruned element
  by element. Every candidate chunk is evaluated at one element at a time
  and only the survivors go on to the next element.
* ``prime-field-linear-algebra``: when the characteristic is a prime p, R is
  a vector space over Z_p and so is the space of function tables. Then
  ``s(R';R)`` is the first m whose power table is in the Z_p-span of the
  lower power tables, which Gaussian elimination mod p decides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._search import CHUNK, digit_block
from .errors import BudgetExceeded, InvalidA, NotFoundWithin, TooLarge
from .poly import FunctionTable, Polynomial, function_tables
from .rings import Quot, Ring, build_ring
from .vanishing import DEFAULT_BUDGET, is_vanishing

__all__ = [
    "SNumberResult",
    "power_table",
    "s_of_ring",
    "s_subring",
    "check_eq1_identity",
    "eq1_polynomial",
    "z2_quotient_ring",
    "bound_n",
    "validate_result",
]

EXHAUSTIVE = "exhaustive"
LINEAR = "prime-field-linear-algebra"


@dataclass
class SNumberResult:
    value: int
    witness: Polynomial
    method: str
    search_bound: int
    # (m, candidates examined, found) for every m tried; certifies minimality
    transcript: list = field(default_factory=list)


def power_table(ring: Ring, m: int) -> FunctionTable:
    if m < 0:
        raise ValueError("m must be >= 0")
    return FunctionTable(ring, ring.pow_codes(ring.codes(), m).tolist())


def _pruned_search(ring: Ring, powers, m: int, alphabet: np.ndarray):
    """Lexicographically first ``(c_0..c_{m-1})`` over ``alphabet`` with
    ``sum c_i r^i == r^m`` everywhere, or None. Returns (tuple, examined)."""
    target = powers[m]
    # c_0 = P(0) = 0^m = 0 for m >= 1, so only c_1..c_{m-1} are free
    free = m - 1
    base = len(alphabet)
    total = base**free
    zero_pos = int(np.flatnonzero(alphabet == 0)[0])
    order = np.flatnonzero(ring.codes() != 0)
    for s in range(0, total, CHUNK):
        digits = digit_block(base, free, s, min(total, s + CHUNK))
        coeffs = alphabet[digits]
        alive = np.arange(len(coeffs))
        for r in order:
            val = np.zeros(len(alive), dtype=np.int64)
            for i in range(1, m):
                val = ring.add_codes(val, ring.mul_codes(coeffs[alive, i - 1], powers[i][r]))
            alive = alive[np.asarray(val) == target[r]]
            if not len(alive):
                break
        if len(alive):
            c = [int(alphabet[zero_pos])] + coeffs[alive[0]].tolist()
            return c, s + int(alive[0]) + 1
    return None, total


def _exhaustive(ring, max_m, budget, alphabet, method=EXHAUSTIVE):
    allc = ring.codes()
    powers = [np.asarray(ring.pow_codes(allc, i), dtype=np.int64) for i in range(max_m + 1)]
    transcript = []
    for m in range(1, max_m + 1):
        if len(alphabet) ** (m - 1) > budget:
            raise BudgetExceeded(
                f"{len(alphabet)}^{m - 1} tuples exceed budget {budget} at m={m}; "
                f"m <= {m - 1} excluded",
                excluded_up_to=m - 1,
            )
        coeffs, examined = _pruned_search(ring, powers, m, alphabet)
        transcript.append((m, examined, coeffs is not None))
        if coeffs is not None:
            witness = Polynomial.from_codes(ring, coeffs)
            return SNumberResult(m, witness, method, len(alphabet) ** (m - 1), transcript)
    raise NotFoundWithin(f"no m <= {max_m} found for {ring}", max_m)


def s_of_ring(ring: Ring, max_m: int = 16, budget: int = DEFAULT_BUDGET) -> SNumberResult:
    """Exhaustive s(R) with the lexicographically first witness."""
    return _exhaustive(ring, max_m, budget, ring.codes())


def _linear(ring, max_m, p, coords):
    """Incremental elimination mod p over flattened power tables.

    Each basis row carries the combination of power tables it came from, so a
    dependency found at m reads off directly as witness coefficients.
    """
    allc = ring.codes()
    width = max_m + 1
    basis = []  # (pivot column, row, combination over tables 0..max_m)
    transcript = []
    for m in range(0, max_m + 1):
        v = coords[ring.pow_codes(allc, m)].ravel() % p
        comb = np.zeros(width, dtype=np.int64)
        comb[m] = 1
        for piv, row, c in basis:
            f = v[piv]
            if f:
                v = (v - f * row) % p
                comb = (comb - f * c) % p
        dependent = not v.any()
        if m >= 1:
            transcript.append((m, len(basis), dependent))
        if dependent:
            # sum_i comb_i * table_i == 0 with comb_m == 1
            one = ring.one_code
            coeffs = [ring.mul_code(ring.encode(int(k)), one) for k in (-comb[:m]) % p]
            witness = Polynomial.from_codes(ring, coeffs)
            return SNumberResult(m, witness, LINEAR, m, transcript)
        piv = int(np.flatnonzero(v)[0])
        inv = pow(int(v[piv]), -1, p)
        basis.append((piv, v * inv % p, comb * inv % p))
    raise NotFoundWithin(f"no m <= {max_m} found for {ring}", max_m)


def s_subring(
    ring: Ring, max_m: int = 64, budget: int = DEFAULT_BUDGET, method: str = "auto"
) -> SNumberResult:
    """s(R';R): coefficients restricted to the prime subring.

    ``method`` is ``"auto"`` (linear algebra when the characteristic is
    prime), ``"linear"`` or ``"exhaustive"``.
    """
    fp = ring.fp_coordinates()
    if method == "auto":
        method = "linear" if fp is not None else "exhaustive"
    if method == "linear":
        if fp is None:
            raise ValueError(f"{ring} has composite characteristic; use method='exhaustive'")
        return _linear(ring, max_m, *fp)
    alphabet = np.array(ring.prime_subring_codes(), dtype=np.int64)
    return _exhaustive(ring, max_m, budget, alphabet)


def validate_result(ring: Ring, res: SNumberResult) -> bool:
    """Re-check a result's type invariants independently of the search."""
    w = res.witness
    if w.degree is not None and w.degree >= res.value:
        return False
    if w.is_zero():
        table = [0] * ring.order
    else:
        table = function_tables(ring, w.codes)[0].tolist()
    if tuple(table) != power_table(ring, res.value).codes:
        return False
    if res.method == LINEAR:
        sub = set(ring.prime_subring_codes())
        return all(c in sub for c in w.codes)
    return True


# --- the rings Z_2[t]/(t^a + t^(a+1)) and the bound ---------------------


def z2_quotient_ring(a: int) -> Ring:
    """Z_2[t]/(t^a + t^(a+1))."""
    return build_ring(Quot(2, (0,) * a + (1, 1)))


def eq1_polynomial(a: int) -> Polynomial:
    """``t^(a-3)·y^4 + (t^(a-3) + t^(a-2))·y^2 + t^(a-2)·y`` over Z_2[t]/(t^a + t^(a+1))."""
    if a < 3:
        raise InvalidA(f"a must be >= 3, got {a}")
    R = z2_quotient_ring(a)
    t = R.generator
    c4 = t ** (a - 3)
    c2 = t ** (a - 3) + t ** (a - 2)
    c1 = t ** (a - 2)
    return Polynomial(R, [0, c1, c2, 0, c4])


def check_eq1_identity(a: int) -> bool:
    return is_vanishing(eq1_polynomial(a))


def bound_n(x: int, max_digits: int = 10**6) -> int:
    """``(x!) ** ((2x)**x * x)``; the exponent is read as ``(2x)^x·x``."""
    if x < 1:
        raise ValueError("x must be >= 1")
    f = math.factorial(x)
    e = (2 * x) ** x * x
    if f > 1 and e * math.log10(f) > max_digits:
        raise TooLarge(f"bound_n({x}) has about {e * math.log10(f):.3g} digits")
    return f**e
