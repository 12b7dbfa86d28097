"""Univariate polynomials over a constructed ring.

Coefficients are stored densely as element codes, index = exponent, with the
leading coefficient nonzero. The zero polynomial has no coefficients and its
degree is ``None``. That is deliberate: integer arithmetic on an undefined
degree should fail loudly.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import NonMonicDivisor, NotAProduct, RingMismatch
from .rings import Element, ProductRing, Ring

__all__ = [
    "Polynomial",
    "FunctionTable",
    "eval_poly",
    "poly_arith",
    "formal_derivative",
    "function_table",
    "function_tables",
    "divrem",
    "from_roots",
    "decompose_over_product",
    "recombine",
]


def _trim(codes):
    codes = list(codes)
    while codes and codes[-1] == 0:
        codes.pop()
    return tuple(codes)


class Polynomial:
    __slots__ = ("ring", "_c")

    def __init__(self, ring: Ring, coeffs: Iterable = ()):
        self.ring = ring
        self._c = _trim(ring(c).code for c in coeffs)

    @classmethod
    def from_codes(cls, ring: Ring, codes: Iterable[int]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._c = _trim(int(c) for c in codes)
        return obj

    @classmethod
    def x(cls, ring: Ring) -> "Polynomial":
        return cls.from_codes(ring, (0, ring.one_code))

    @classmethod
    def monomial(cls, ring: Ring, k: int, c=1) -> "Polynomial":
        return cls.from_codes(ring, (0,) * k + (ring(c).code,))

    @classmethod
    def constant(cls, ring: Ring, c) -> "Polynomial":
        return cls.from_codes(ring, (ring(c).code,))

    @property
    def codes(self) -> tuple:
        return self._c

    @property
    def coeffs(self) -> list:
        return [Element(self.ring, c) for c in self._c]

    def coeff(self, i: int) -> Element:
        return Element(self.ring, self._c[i] if i < len(self._c) else 0)

    @property
    def degree(self) -> int | None:
        return len(self._c) - 1 if self._c else None

    @property
    def leading(self) -> Element | None:
        return Element(self.ring, self._c[-1]) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == self.ring.one_code

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self._c))

    def __repr__(self):
        return f"Polynomial({str(self)!r} over {self.ring})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic --
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Element)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        add = self.ring.add_code
        return Polynomial.from_codes(
            self.ring, [add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)]
        )

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.neg_code
        return Polynomial.from_codes(self.ring, [neg(c) for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial.from_codes(self.ring, ())
        ring = self.ring
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        bb = np.array(b, dtype=np.int64)
        for i, c in enumerate(a):
            if c:
                seg = out[i : i + len(b)]
                out[i : i + len(b)] = ring.add_codes(seg, ring.mul_codes(c, bb))
        return Polynomial.from_codes(ring, out.tolist())

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = self.ring(c).code
        mul = self.ring.mul_code
        return Polynomial.from_codes(self.ring, [mul(c, a) for a in self._c])

    def __pow__(self, e: int):
        result = Polynomial.constant(self.ring, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, a) -> Element:
        return eval_poly(self, a)

    def derivative(self) -> "Polynomial":
        return formal_derivative(self)

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    def function_table(self) -> "FunctionTable":
        return function_table(self)


class FunctionTable:
    """Values of a polynomial function at every element, in canonical order."""

    __slots__ = ("ring", "codes")

    def __init__(self, ring: Ring, codes: Sequence[int]):
        if len(codes) != ring.order:
            raise ValueError(f"table has {len(codes)} entries, ring has {ring.order} elements")
        self.ring = ring
        self.codes = tuple(int(c) for c in codes)

    @property
    def values(self) -> list:
        return [Element(self.ring, c) for c in self.codes]

    def __len__(self):
        return len(self.codes)

    def __eq__(self, other):
        if isinstance(other, FunctionTable):
            return self.ring is other.ring and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.codes))

    def __repr__(self):
        fmt = self.ring.format_element
        return f"FunctionTable([{', '.join(fmt(c) for c in self.codes)}])"


def format_poly(F: Polynomial, var: str = "x") -> str:
    ring = F.ring
    terms = []
    for i in range(len(F.codes) - 1, -1, -1):
        c = F.codes[i]
        if not c:
            continue
        s = ring.format_element(c)
        if not s.isdigit() and not s.startswith("(") and not _is_atom(s):
            s = f"({s})"
        if i == 0:
            terms.append(s)
            continue
        mono = var if i == 1 else f"{var}^{i}"
        if c == ring.one_code:
            terms.append(mono)
        elif s.isdigit():
            terms.append(f"{s}{mono}")
        else:
            terms.append(f"{s}*{mono}")
    return "+".join(terms) if terms else "0"


def _is_atom(s: str) -> bool:
    # a single t-monomial such as "t", "t^3" or "2t^2"
    return "+" not in s


def eval_poly(F: Polynomial, a) -> Element:
    """Horner evaluation of F at a."""
    ring = F.ring
    if isinstance(a, Element) and a.ring is not ring:
        raise RingMismatch(f"{a.ring} vs {ring}")
    x = ring(a).code
    add, mul = ring.add_code, ring.mul_code
    acc = 0
    for c in reversed(F.codes):
        acc = add(mul(acc, x), c)
    return Element(ring, acc)


def poly_arith(op: str, F: Polynomial, G=None) -> Polynomial:
    if op == "neg":
        return -F
    if op == "scale":
        return F.scale(G)
    if not isinstance(G, Polynomial) or G.ring is not F.ring:
        raise RingMismatch("polynomials over different rings")
    if op == "add":
        return F + G
    if op == "sub":
        return F - G
    if op == "mul":
        return F * G
    raise ValueError(f"unknown op {op!r}")


def formal_derivative(F: Polynomial) -> Polynomial:
    """Coefficient i of the result is (i+1)·a_{i+1}, computed in the ring."""
    ring = F.ring
    mul, enc = ring.mul_code, ring.encode
    return Polynomial.from_codes(
        ring, [mul(enc(i), c) for i, c in enumerate(F.codes) if i > 0]
    )


def function_tables(ring: Ring, coeffs, points=None) -> np.ndarray:
    """Vectorized Horner: row ``i`` of the result is the polynomial with code
    row ``coeffs[i]`` (constant first) evaluated at every point.

    ``points`` defaults to all elements in canonical order.
    """
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if coeffs.ndim == 1:
        coeffs = coeffs[None, :]
    xs = ring.codes() if points is None else np.asarray(points, dtype=np.int64)
    acc = np.zeros((coeffs.shape[0], len(xs)), dtype=np.int64)
    for j in range(coeffs.shape[1] - 1, -1, -1):
        acc = ring.add_codes(ring.mul_codes(acc, xs[None, :]), coeffs[:, j : j + 1])
    return np.asarray(acc, dtype=np.int64)


def function_table(F: Polynomial) -> FunctionTable:
    if F.is_zero():
        return FunctionTable(F.ring, [0] * F.ring.order)
    return FunctionTable(F.ring, function_tables(F.ring, F.codes)[0].tolist())


def divrem(F: Polynomial, G: Polynomial) -> tuple:
    """Quotient and remainder of F by a monic G."""
    if G.ring is not F.ring:
        raise RingMismatch("polynomials over different rings")
    if not G.is_monic():
        raise NonMonicDivisor(f"{G} is not monic")
    ring = F.ring
    dg = G.degree
    rem = np.array(F.codes, dtype=np.int64)
    if len(rem) <= dg:
        return Polynomial.from_codes(ring, ()), F
    quot = np.zeros(len(rem) - dg, dtype=np.int64)
    g = np.array(G.codes, dtype=np.int64)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = int(rem[i])
        if c:
            quot[i - dg] = c
            seg = rem[i - dg : i + 1]
            rem[i - dg : i + 1] = ring.sub_codes(seg, ring.mul_codes(c, g))
    return Polynomial.from_codes(ring, quot.tolist()), Polynomial.from_codes(
        ring, rem[:dg].tolist()
    )


def from_roots(ring: Ring, roots: Sequence) -> Polynomial:
    """The monic product of (x - r) over the listed roots."""
    out = Polynomial.constant(ring, 1)
    x = Polynomial.x(ring)
    for r in roots:
        out = out * (x - ring(r))
    return out


def decompose_over_product(F: Polynomial) -> list:
    """Project F over R_1 x ... x R_k onto its component polynomials."""
    ring = F.ring
    if not isinstance(ring, ProductRing):
        raise NotAProduct(f"{ring} is not a product ring")
    parts = ring.split(np.array(F.codes, dtype=np.int64))
    return [Polynomial.from_codes(f, np.atleast_1d(p).tolist()) for f, p in zip(ring.factors, parts)]


def recombine(ring: Ring, parts: Sequence[Polynomial]) -> Polynomial:
    """Inverse of :func:`decompose_over_product`."""
    if not isinstance(ring, ProductRing):
        raise NotAProduct(f"{ring} is not a product ring")
    if len(parts) != len(ring.factors):
        raise ValueError("wrong number of components")
    for f, part in zip(ring.factors, parts):
        if part.ring is not f:
            raise RingMismatch(f"component over {part.ring}, expected {f}")
    n = max((len(p.codes) for p in parts), default=0)
    cols = [np.array(p.codes + (0,) * (n - len(p.codes)), dtype=np.int64) for p in parts]
    return Polynomial.from_codes(ring, np.atleast_1d(ring.join(cols)).tolist() if n else ())
