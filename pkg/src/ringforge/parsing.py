"""Text grammar for ring specs, polynomials and ring elements.

Ring specs::

    ring := base ( "x" base )*
    base := "Z" nat
          | "GF(" nat ")"
          | "GF(" nat "," polylit ")"
          | "Z" nat "[x]/(" polylit ")"
          | "(" ring ")"

The parenthesized form only matters for nested products, which the
formatter writes as e.g. ``(Z2xZ3)xZ2`` so that they read back unchanged.
The product separator is the letter ``x``; inside ``polylit`` the same letter
is the indeterminate, and grammar position tells them apart. Whitespace is
ignored everywhere.

Polynomials over a ring are sums of ``coeff "*"? "x" ("^" nat)?`` or bare
``coeff`` terms (``-`` is accepted too). Coefficient literals:

* an integer ``k``, meaning ``k·1`` in any ring;
* for GF/quotient rings, ``t``/``t^k`` for the ring generator, a
  parenthesized polynomial in ``t`` such as ``(1+t)``, or a bracketed
  coefficient vector ``[1,1]`` (constant first);
* for products, a tuple ``(a,b,...)`` of factor literals.
"""

from __future__ import annotations

import re

from sympy import factorint, isprime

from .errors import CoefficientOutOfRing, ParseError, RingError, SemanticError
from .poly import Polynomial, format_poly
from .rings import Element, Gf, Product, Quot, Ring, Zn, default_modulus

__all__ = [
    "parse_ring_spec",
    "format_ring_spec",
    "parse_poly",
    "parse_element",
    "format_poly",
]


class _Cursor:
    """Character cursor over the input with whitespace skipped up front."""

    def __init__(self, text: str):
        # keep original offsets: map compact index -> original index
        self.text = text
        self.chars = []
        self.offsets = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch)
                self.offsets.append(i)
        self.s = "".join(self.chars)
        self.i = 0

    def offset(self, i=None):
        i = self.i if i is None else i
        if i < len(self.offsets):
            return self.offsets[i]
        return len(self.text)

    def peek(self, k=1):
        return self.s[self.i : self.i + k]

    def at_end(self):
        return self.i >= len(self.s)

    def error(self, msg):
        raise ParseError(msg, self.offset())

    def expect(self, lit):
        if not self.s.startswith(lit, self.i):
            self.error(f"expected {lit!r}")
        self.i += len(lit)

    def accept(self, lit):
        if self.s.startswith(lit, self.i):
            self.i += len(lit)
            return True
        return False

    def nat(self):
        m = re.match(r"\d+", self.s[self.i :])
        if not m:
            self.error("expected a number")
        self.i += m.end()
        return int(m.group())


def _int_poly(cur: _Cursor, var: str) -> dict:
    """Parse a sum of integer-coefficient terms in ``var``; returns {exp: coeff}."""
    out: dict = {}
    sign = 1
    if cur.accept("-"):
        sign = -1
    else:
        cur.accept("+")
    while True:
        start = cur.i
        coeff = None
        if cur.peek().isdigit():
            coeff = cur.nat()
            cur.accept("*")
        if cur.accept(var):
            exp = cur.nat() if cur.accept("^") else 1
        else:
            if coeff is None:
                cur.i = start
                cur.error(f"expected a term in {var}")
            exp = 0
        out[exp] = out.get(exp, 0) + sign * (1 if coeff is None else coeff)
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        else:
            return out


def _dense(terms: dict, p: int) -> tuple:
    if not terms:
        return ()
    c = [0] * (max(terms) + 1)
    for e, v in terms.items():
        c[e] = v % p
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _prime_power(q: int, off: int):
    f = factorint(q)
    if q < 2 or len(f) != 1:
        raise SemanticError(f"GF({q}): {q} is not a prime power (at offset {off})")
    ((p, k),) = f.items()
    return p, k


def _base(cur: _Cursor):
    off = cur.offset()
    if cur.accept("("):
        spec = _ring(cur)
        cur.expect(")")
        return spec
    if cur.accept("GF("):
        q = cur.nat()
        p, k = _prime_power(q, off)
        if cur.accept(","):
            mod = _dense(_int_poly(cur, "x"), p)
            cur.expect(")")
            return Gf(p, k, mod)
        cur.expect(")")
        return Gf(p, k)
    if cur.accept("Z"):
        n = cur.nat()
        if cur.accept("[x]/("):
            if not isprime(n):
                raise SemanticError(f"Z{n}[x]/(...): {n} is not prime (at offset {off})")
            mod = _dense(_int_poly(cur, "x"), n)
            cur.expect(")")
            return Quot(n, mod)
        return Zn(n)
    cur.error("expected 'Z', 'GF(' or '('")


def _ring(cur: _Cursor):
    factors = [_base(cur)]
    while cur.accept("x"):
        factors.append(_base(cur))
    return factors[0] if len(factors) == 1 else Product(tuple(factors))


def parse_ring_spec(s: str):
    cur = _Cursor(s)
    spec = _ring(cur)
    if not cur.at_end():
        cur.error("unexpected trailing input")
    return spec


def _zp_literal(coeffs, var="x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def format_ring_spec(spec) -> str:
    if isinstance(spec, Zn):
        return f"Z{spec.n}"
    if isinstance(spec, Gf):
        q = spec.p**spec.k
        try:
            if spec.modulus == default_modulus(spec.p, spec.k):
                return f"GF({q})"
        except RingError:
            pass
        return f"GF({q},{_zp_literal(spec.modulus)})"
    if isinstance(spec, Quot):
        return f"Z{spec.p}[x]/({_zp_literal(spec.modulus)})"
    if isinstance(spec, Product):
        parts = []
        for f in spec.factors:
            s = format_ring_spec(f)
            parts.append(f"({s})" if isinstance(f, Product) else s)
        return "x".join(parts)
    raise TypeError(f"not a ring spec: {spec!r}")


# --- element and polynomial literals ----------------------------------------


def _element(cur: _Cursor, ring: Ring) -> int:
    from .rings import PolyQuotientRing, ProductRing

    off = cur.offset()
    if isinstance(ring, ProductRing) and cur.peek() == "(":
        cur.expect("(")
        parts = [_element(cur, ring.factors[0])]
        for f in ring.factors[1:]:
            cur.expect(",")
            parts.append(_element(cur, f))
        if cur.peek() == ",":
            raise CoefficientOutOfRing(
                f"tuple longer than {len(ring.factors)} factors (at offset {cur.offset()})"
            )
        cur.expect(")")
        return int(ring.join(parts))
    if isinstance(ring, PolyQuotientRing):
        if cur.peek() == "[":
            cur.expect("[")
            vals = [cur.nat()]
            while cur.accept(","):
                vals.append(cur.nat())
            cur.expect("]")
            try:
                return ring.encode(vals)
            except CoefficientOutOfRing as exc:
                raise CoefficientOutOfRing(f"{exc} (at offset {off})") from None
        if cur.peek() == "(":
            cur.expect("(")
            terms = _int_poly(cur, "t")
            cur.expect(")")
            return _t_value(ring, terms)
        k = 1
        start = cur.i
        if cur.peek().isdigit():
            k = cur.nat()
            if cur.peek() != "t":
                cur.i = start
        if cur.peek() == "t":
            # "t", "t^3", or with a scalar prefix "2t^3"
            cur.expect("t")
            exp = cur.nat() if cur.accept("^") else 1
            return _t_value(ring, {exp: k})
    if cur.peek().isdigit():
        return ring.encode(cur.nat())
    if cur.peek() and (cur.peek() == "t" or (cur.peek() in "([" and not isinstance(ring, ProductRing))):
        raise CoefficientOutOfRing(f"literal at offset {off} is not an element of {ring}")
    cur.error("expected a coefficient literal")


def _t_value(ring, terms: dict) -> int:
    acc = 0
    g = ring.generator.code
    for e, c in terms.items():
        acc = ring.add_code(acc, ring.mul_code(ring.encode(c % ring.p), ring.pow_code(g, e)))
    return acc


def parse_element(s: str, ring: Ring):
    cur = _Cursor(s)
    neg = cur.accept("-")
    code = _element(cur, ring)
    if not cur.at_end():
        cur.error("unexpected trailing input")
    el = Element(ring, code)
    return -el if neg else el


def parse_poly(s: str, ring: Ring) -> Polynomial:
    cur = _Cursor(s)
    if cur.at_end():
        cur.error("empty polynomial")
    coeffs: dict = {}
    sign = -1 if cur.accept("-") else 1
    if sign == 1:
        cur.accept("+")
    while True:
        start = cur.i
        if cur.peek() == "x":
            c = ring.one_code
        else:
            c = _element(cur, ring)
            cur.accept("*")
        if cur.accept("x"):
            exp = cur.nat() if cur.accept("^") else 1
        else:
            if cur.i == start:
                cur.error("expected a term")
            exp = 0
        if sign < 0:
            c = ring.neg_code(c)
        coeffs[exp] = ring.add_code(coeffs.get(exp, 0), c)
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        elif cur.at_end():
            break
        else:
            cur.error("expected '+', '-' or end of input")
    n = max(coeffs) + 1
    return Polynomial.from_codes(ring, [coeffs.get(i, 0) for i in range(n)])
