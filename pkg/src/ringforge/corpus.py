"""Enumerations of ring specs used by the exhaustive checks."""

from __future__ import annotations

import itertools
import math

from sympy import isprime

from .rings import Gf, Product, Quot, Zn, build_ring, default_modulus, is_irreducible


def _monic_moduli(p, d):
    for code in range(p**d):
        yield tuple((code // p**i) % p for i in range(d)) + (1,)


def _primes(limit):
    return [p for p in range(2, limit + 1) if isprime(p)]


def base_specs(max_order: int):
    """Every Zn, every GF(p^k) with every irreducible modulus, and every
    Z_p[x]/(f) with f monic of degree >= 2, up to ``max_order`` elements."""
    out = [Zn(n) for n in range(2, max_order + 1)]
    for p in _primes(max_order):
        d = 1
        while p**d <= max_order:
            for f in _monic_moduli(p, d):
                if is_irreducible(f, p):
                    out.append(Gf(p, d, f))
                if d >= 2:
                    out.append(Quot(p, f))
            d += 1
    return out


def simple_factors(max_order: int):
    """Factors used to build products: Zn, default GF(q), Z_p[x]/(x^k)."""
    out = [Zn(n) for n in range(2, max_order + 1)]
    for p in _primes(max_order):
        d = 1
        while p**d <= max_order:
            if d >= 2:
                out.append(Gf(p, d, default_modulus(p, d)))
                out.append(Quot(p, (0,) * d + (1,)))
            d += 1
    return out


def _order(spec):
    return build_ring(spec).order


def product_specs(max_order: int, max_factors: int = 3):
    factors = [(s, _order(s)) for s in simple_factors(max_order // 2)]
    out = []
    for k in range(2, max_factors + 1):
        for combo in itertools.product(factors, repeat=k):
            if math.prod(o for _, o in combo) <= max_order:
                out.append(Product(tuple(s for s, _ in combo)))
    return out


def constructible_specs(max_order: int = 64):
    """Every base spec plus ordered 2- and 3-factor products (flat), plus one
    nested product per small pair, all of order <= ``max_order``."""
    out = base_specs(max_order) + product_specs(max_order)
    small = [s for s in simple_factors(8)]
    for a, b, c in itertools.product(small[:3], repeat=3):
        nested = Product((Product((a, b)), c))
        if _order(nested) <= max_order:
            out.append(nested)
    return out


def builtin_rings(max_order: int = 36):
    """Named corpus for the root-counting checks."""
    specs = [Zn(n) for n in range(2, max_order + 1)]
    for p in _primes(max_order):
        d = 2
        while p**d <= max_order:
            specs.append(Gf(p, d, default_modulus(p, d)))
            specs.append(Quot(p, (0,) * d + (1,)))
            d += 1
    a = 2
    while 2 ** (a + 1) <= max_order:
        specs.append(Quot(2, (0,) * a + (1, 1)))
        a += 1
    specs.extend(product_specs(max_order))
    return specs


def char2_specs(max_order: int = 16):
    """Every characteristic-2 spec of order <= max_order in the corpus."""
    out = []
    for s in base_specs(max_order) + product_specs(max_order, max_factors=4):
        r = build_ring(s)
        if r.characteristic == 2:
            out.append(s)
    return out
