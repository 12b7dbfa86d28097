"""Root counting over finite rings.

Over a product ``R = R_1 x ... x R_k`` an element is a root of F iff each
component is a root of the component polynomial F_i. So if F_i has a_i
non-roots among n_i elements, F has ``n - prod(n_i - a_i)`` non-roots,
where ``n = prod(n_i)``. Expanding the product gives the alternating
inclusion-exclusion sum over index subsets, with sign ``(-1)^(|S|+1)``.

The brute-force side enumerates every polynomial function on R: all
polynomials of degree below the minimal monic vanishing degree D. Division
by a monic vanishing polynomial of degree D preserves the induced function,
so these cover everything.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy import factorint

from ._search import CHUNK, digit_block
from .errors import BudgetExceeded, InvalidNonRootSet, NotSquarefree
from .poly import Polynomial, function_tables
from .rings import Element, Ring, Zn
from .vanishing import minimal_monic_vanishing_degree

__all__ = [
    "RootCountReport",
    "count_roots",
    "nonroot_count",
    "nonroot_count_inclusion_exclusion",
    "nonroot_count_uniform_sign",
    "achievable_nonroot_counts",
    "feasible_root_counts_squarefree",
    "brute_force_root_counts",
    "has_zero_divisors",
    "ROOT_BUDGET",
]

ROOT_BUDGET = 1 << 22
WITNESS_ORDER_LIMIT = 16


@dataclass
class RootCountReport:
    ring: object
    order: int
    achievable_counts: frozenset
    method: str
    per_count_witness: dict = field(default_factory=dict)

    @property
    def unachievable(self) -> frozenset:
        return frozenset(range(self.order + 1)) - self.achievable_counts

    @property
    def achievable_nonroot_counts(self) -> frozenset:
        return frozenset(self.order - c for c in self.achievable_counts)


def count_roots(F: Polynomial):
    """``(count, roots)`` by exhaustive evaluation."""
    ring = F.ring
    if F.is_zero():
        return ring.order, ring.elements()
    table = function_tables(ring, F.codes)[0]
    roots = [Element(ring, int(c)) for c in np.flatnonzero(table == 0)]
    return len(roots), roots


def nonroot_count(orders, nonroots) -> int:
    """Closed form ``n - prod(n_i - a_i)``."""
    return math.prod(orders) - math.prod(n - a for n, a in zip(orders, nonroots))


def nonroot_count_inclusion_exclusion(orders, nonroots) -> int:
    """Expanded inclusion-exclusion, sign ``(-1)^(|S|+1)`` per index subset S."""
    n = math.prod(orders)
    k = len(orders)
    total = Fraction(0)
    for size in range(1, k + 1):
        for subset in itertools.combinations(range(k), size):
            num = math.prod(nonroots[j] for j in subset)
            den = math.prod(orders[j] for j in subset)
            total += (-1) ** (size + 1) * Fraction(n * num, den)
    assert total.denominator == 1
    return int(total)


def nonroot_count_uniform_sign(orders, nonroots) -> int:
    """The same sum with the sign fixed at ``(-1)^(k+1)`` for every subset.

    Kept only so the tests can show it disagrees with enumeration for k = 2.
    """
    n = math.prod(orders)
    k = len(orders)
    total = Fraction(0)
    for size in range(1, k + 1):
        for subset in itertools.combinations(range(k), size):
            num = math.prod(nonroots[j] for j in subset)
            den = math.prod(orders[j] for j in subset)
            total += (-1) ** (k + 1) * Fraction(n * num, den)
    return int(total)


def achievable_nonroot_counts(orders, nonroot_sets) -> frozenset:
    """Every value of the non-root formula over ``A_1 x ... x A_k``."""
    orders = [int(n) for n in orders]
    if len(orders) != len(nonroot_sets):
        raise ValueError("one non-root set per factor")
    for n, A in zip(orders, nonroot_sets):
        bad = [a for a in A if not 0 <= a <= n]
        if bad:
            raise InvalidNonRootSet(f"{bad} outside [0, {n}]")
    return frozenset(
        nonroot_count(orders, combo) for combo in itertools.product(*map(sorted, nonroot_sets))
    )


def feasible_root_counts_squarefree(n: int) -> RootCountReport:
    """Root counts over Z_n for squarefree n: every function on a prime field
    is polynomial, so the achievable counts are exactly ``prod r_i`` with
    ``0 <= r_i <= p_i``."""
    if n < 2:
        raise NotSquarefree(f"{n} is not >= 2")
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        raise NotSquarefree(f"{n} = {f} is not squarefree")
    primes = sorted(f)
    counts = frozenset(
        math.prod(rs) for rs in itertools.product(*(range(p + 1) for p in primes))
    )
    return RootCountReport(Zn(n), n, counts, "formula")


def brute_force_root_counts(
    ring: Ring, budget: int = ROOT_BUDGET, witnesses: bool | None = None
) -> RootCountReport:
    """Root counts of every polynomial function on ``ring`` by enumeration."""
    n = ring.order
    D, _ = minimal_monic_vanishing_degree(ring)
    total = n**D
    if total > budget:
        raise BudgetExceeded(f"{n}^{D} = {total} polynomials exceed budget {budget}")
    if witnesses is None:
        witnesses = n <= WITNESS_ORDER_LIMIT
    seen: dict = {}
    for s in range(0, total, CHUNK):
        # digit j is the coefficient of x^j, lexicographic over (c_0, c_1, ...)
        coeffs = digit_block(n, D, s, min(total, s + CHUNK))
        counts = (function_tables(ring, coeffs) == 0).sum(axis=1)
        uniq, first = np.unique(counts, return_index=True)
        for c, i in zip(uniq.tolist(), first.tolist()):
            if c not in seen:
                seen[c] = coeffs[i]
    report = RootCountReport(ring.spec, n, frozenset(seen), "brute-force")
    if witnesses:
        report.per_count_witness = {
            c: Polynomial.from_codes(ring, row.tolist()) for c, row in sorted(seen.items())
        }
    return report


def has_zero_divisors(ring: Ring):
    """``(True, (a, b))`` for the first zero-divisor pair, else ``(False, None)``."""
    pair = ring.zero_divisor_pair()
    if pair is None:
        return False, None
    return True, (Element(ring, pair[0]), Element(ring, pair[1]))
