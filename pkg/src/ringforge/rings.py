"""Finite commutative rings with identity.

A ring is described by a small constructor tree (``Zn``, ``Gf``, ``Quot``,
``Product``) and turned into an immutable handle by :func:`build_ring`.

Internally every element is an integer *code*: its position in the
canonical enumeration order.

* ``Zn``: the residue itself.
* ``Gf``/``Quot``: coefficient vector read as base-``p`` digits, constant
  coefficient least significant, so GF(4) enumerates as ``0, 1, t, t+1``.
* ``Product``: row-major over the factors, last factor varying fastest.

Working on codes lets the exhaustive searches in the other modules run as
numpy fancy-indexing into memoized addition and multiplication tables.
:class:`Element` wraps a code for interactive use.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np
from sympy import isprime

from .errors import (
    CoefficientOutOfRing,
    EmptyProduct,
    InvalidModulus,
    NotPrime,
    ReducibleModulus,
    RingMismatch,
    TooLarge,
    ZeroRing,
)

__all__ = [
    "Zn",
    "Gf",
    "Quot",
    "Product",
    "RingSpec",
    "Ring",
    "Element",
    "AxiomReport",
    "MEMO_CUTOFF",
    "AXIOM_CUTOFF",
    "build_ring",
    "arith",
    "enumerate_elements",
    "annihilator",
    "prime_subring",
    "is_irreducible",
    "default_modulus",
    "verify_ring_axioms",
    "verify_tables",
]

MEMO_CUTOFF = 4096
AXIOM_CUTOFF = 4096


def _clean_coeffs(coeffs, p):
    c = [int(a) % p for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Zn:
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))


@dataclass(frozen=True)
class Gf:
    """GF(p^k) as Z_p[t]/(modulus); ``modulus`` lists coefficients constant first."""

    p: int
    k: int
    modulus: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "k", int(self.k))
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.k))
        else:
            object.__setattr__(self, "modulus", _clean_coeffs(self.modulus, max(self.p, 1)))


@dataclass(frozen=True)
class Quot:
    """Z_p[t]/(modulus) for any monic modulus, reducible or not."""

    p: int
    modulus: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "modulus", _clean_coeffs(self.modulus, max(self.p, 1)))


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))


RingSpec = Union[Zn, Gf, Quot, Product]


# --- polynomials over Z_p as plain int tuples (used for moduli) -------------


def _zp_rem(f, g, p):
    """Remainder of f modulo g over Z_p; g must have a unit leading coefficient."""
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv % p
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return _clean_coeffs(f[:dg], p)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility over Z_p by trial division by every monic polynomial of
    degree 1..deg(f)//2."""
    f = _clean_coeffs(f, p)
    deg = len(f) - 1
    if deg < 1:
        raise ValueError("is_irreducible needs a polynomial of degree >= 1")
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = tuple(low) + (1,)
            if not _zp_rem(f, g, p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple:
    """Built-in modulus for GF(p^k): the first irreducible monic polynomial of
    degree k in canonical order (lower coefficients as base-p digits, constant
    least significant). Gives t for GF(p), t^2+t+1 for GF(4), t^3+t+1 for
    GF(8), t^2+1 for GF(9), t^4+t+1 for GF(16)."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise InvalidModulus("GF degree must be >= 1")
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        f = tuple(low) + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# --- ring handles -----------------------------------------------------------


class Element:
    """A ring element: a ring handle plus the element's canonical code."""

    __slots__ = ("ring", "code")

    def __init__(self, ring: "Ring", code: int):
        self.ring = ring
        self.code = int(code)

    @property
    def value(self):
        """Canonical form: residue, coefficient tuple, or tuple of factor values."""
        return self.ring.decode(self.code)

    def _other(self, other):
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other.code
        if isinstance(other, int):
            return self.ring.encode(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Element(self.ring, self.ring.add_code(self.code, b))

    __radd__ = __add__

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Element(self.ring, self.ring.mul_code(self.code, b))

    __rmul__ = __mul__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Element(self.ring, self.ring.add_code(self.code, self.ring.neg_code(b)))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Element(self.ring, self.ring.add_code(b, self.ring.neg_code(self.code)))

    def __neg__(self):
        return Element(self.ring, self.ring.neg_code(self.code))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        return Element(self.ring, self.ring.pow_code(self.code, e))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring is other.ring and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ring.encode(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"Element({self.ring.format_element(self.code)!r} in {self.ring})"

    def __str__(self):
        return self.ring.format_element(self.code)


class Ring:
    """Immutable handle to a finite commutative ring with identity."""

    spec: RingSpec
    order: int
    characteristic: int

    def __init__(self, spec):
        self.spec = spec
        self._add_t = None
        self._mul_t = None
        self._lists = None

    # -- subclass hooks (vectorized over int64 arrays) --
    def _add_direct(self, a, b):
        raise NotImplementedError

    def _mul_direct(self, a, b):
        raise NotImplementedError

    def _neg_direct(self, a):
        raise NotImplementedError

    def encode(self, value) -> int:
        raise NotImplementedError

    def decode(self, code: int):
        raise NotImplementedError

    def format_element(self, code: int) -> str:
        raise NotImplementedError

    def fp_coordinates(self):
        """``(p, coords)`` with ``coords[code]`` the element's vector over Z_p,
        or ``None`` when the characteristic is not prime."""
        return None

    # -- basics --
    def __repr__(self):
        from .parsing import format_ring_spec

        return f"Ring({format_ring_spec(self.spec)})"

    __str__ = __repr__

    @property
    def one_code(self) -> int:
        return self.encode(1)

    @property
    def zero(self) -> Element:
        return Element(self, 0)

    @property
    def one(self) -> Element:
        return Element(self, self.one_code)

    def __call__(self, value) -> Element:
        if isinstance(value, Element):
            if value.ring is not self:
                raise RingMismatch(f"{value.ring} vs {self}")
            return value
        return Element(self, self.encode(value))

    def elements(self) -> list:
        return [Element(self, c) for c in range(self.order)]

    def codes(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    # -- memoized tables --
    @property
    def memoized(self) -> bool:
        return self.order <= MEMO_CUTOFF

    def _build_table(self, op):
        n = self.order
        dtype = np.int32 if n > 2**15 - 1 else np.int16
        out = np.empty((n, n), dtype=dtype)
        b = np.arange(n, dtype=np.int64)
        block = max(1, 2**18 // n)
        for start in range(0, n, block):
            a = np.arange(start, min(n, start + block), dtype=np.int64)[:, None]
            out[start : start + len(a)] = op(a, b[None, :])
        out.setflags(write=False)
        return out

    @property
    def add_table(self):
        if self._add_t is None and self.memoized:
            self._add_t = self._build_table(self._add_direct)
        return self._add_t

    @property
    def mul_table(self):
        if self._mul_t is None and self.memoized:
            self._mul_t = self._build_table(self._mul_direct)
        return self._mul_t

    # -- vectorized code arithmetic --
    def add_codes(self, a, b):
        t = self.add_table
        if t is not None:
            return t[a, b]
        return self._add_direct(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def mul_codes(self, a, b):
        t = self.mul_table
        if t is not None:
            return t[a, b]
        return self._mul_direct(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def neg_codes(self, a):
        return self._neg_direct(np.asarray(a, dtype=np.int64))

    def sub_codes(self, a, b):
        return self.add_codes(a, self.neg_codes(b))

    # -- scalar code arithmetic (nested lists are much faster than numpy items) --
    def _scalar_tables(self):
        if self._lists is None:
            if self.order <= 512:
                self._lists = (self.add_table.tolist(), self.mul_table.tolist())
            else:
                self._lists = False
        return self._lists

    def add_code(self, a: int, b: int) -> int:
        t = self._scalar_tables()
        if t:
            return t[0][a][b]
        return int(self.add_codes(a, b))

    def mul_code(self, a: int, b: int) -> int:
        t = self._scalar_tables()
        if t:
            return t[1][a][b]
        return int(self.mul_codes(a, b))

    def neg_code(self, a: int) -> int:
        return int(self._neg_direct(np.asarray(a, dtype=np.int64)))

    def pow_code(self, a: int, e: int) -> int:
        result, base = self.one_code, a
        while e:
            if e & 1:
                result = self.mul_code(result, base)
            base = self.mul_code(base, base)
            e >>= 1
        return result

    def pow_codes(self, codes, e: int):
        """Elementwise ``codes**e`` with ``0**0 == 1``."""
        codes = np.asarray(codes, dtype=np.int64)
        result = np.full(codes.shape, self.one_code, dtype=np.int64)
        base = codes
        while e:
            if e & 1:
                result = self.mul_codes(result, base)
            base = self.mul_codes(base, base)
            e >>= 1
        return np.asarray(result, dtype=np.int64)

    # -- arithmetic on Elements --
    def _code_of(self, a) -> int:
        return self(a).code

    def add(self, a, b) -> Element:
        return Element(self, self.add_code(self._code_of(a), self._code_of(b)))

    def sub(self, a, b) -> Element:
        return Element(self, self.add_code(self._code_of(a), self.neg_code(self._code_of(b))))

    def mul(self, a, b) -> Element:
        return Element(self, self.mul_code(self._code_of(a), self._code_of(b)))

    def neg(self, a) -> Element:
        return Element(self, self.neg_code(self._code_of(a)))

    # -- structure --
    def annihilator_codes(self, a: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.mul_codes(a, self.codes())) == 0)

    def prime_subring_codes(self) -> list:
        out = [0]
        one = self.one_code
        c = one
        while c != 0:
            out.append(c)
            c = self.add_code(c, one)
        return out

    def zero_divisor_pair(self):
        """First ``(a, b)`` in canonical order with ``a, b != 0`` and ``a*b == 0``."""
        allc = self.codes()
        for a in range(1, self.order):
            hits = np.flatnonzero(np.asarray(self.mul_codes(a, allc[1:])) == 0)
            if len(hits):
                return a, int(hits[0]) + 1
        return None

    def is_field(self) -> bool:
        return self.zero_divisor_pair() is None


class ZnRing(Ring):
    def __init__(self, spec: Zn):
        super().__init__(spec)
        self.n = spec.n
        self.order = spec.n
        self.characteristic = spec.n

    def _add_direct(self, a, b):
        return (a + b) % self.n

    def _mul_direct(self, a, b):
        return (a * b) % self.n

    def _neg_direct(self, a):
        return (-a) % self.n

    def encode(self, value) -> int:
        if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
            raise CoefficientOutOfRing(f"{value!r} is not an element of Z{self.n}")
        return int(value) % self.n

    def decode(self, code):
        return int(code)

    def format_element(self, code):
        return str(int(code))

    def fp_coordinates(self):
        if isprime(self.n):
            return self.n, np.arange(self.n, dtype=np.int64)[:, None]
        return None


class PolyQuotientRing(Ring):
    """Z_p[t]/(f) for monic f; backs both ``Gf`` and ``Quot`` specs."""

    def __init__(self, spec, p: int, modulus: tuple):
        super().__init__(spec)
        self.p = p
        self.modulus = modulus
        self.degree = d = len(modulus) - 1
        self.order = p**d
        self.characteristic = p
        self._pows = p ** np.arange(d, dtype=np.int64)
        # row k: t^k reduced mod f, for k < 2d - 1
        red = np.zeros((max(2 * d - 1, 1), d), dtype=np.int64)
        for k in range(2 * d - 1):
            red[k] = _pad(_zp_rem([0] * k + [1], modulus, p), d)
        self._red = red

    def digits(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] // self._pows) % self.p

    def undigits(self, digits):
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self._pows

    def _add_direct(self, a, b):
        return self.undigits(self.digits(a) + self.digits(b))

    def _neg_direct(self, a):
        return self.undigits(-self.digits(a))

    def _mul_direct(self, a, b):
        da, db = np.broadcast_arrays(self.digits(a), self.digits(b))
        d, p = self.degree, self.p
        conv = np.zeros(da.shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            conv[..., i : i + d] += da[..., i : i + 1] * db
        conv %= p
        return self.undigits(conv @ self._red)

    def encode(self, value) -> int:
        p, d = self.p, self.degree
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            return int(value) % p
        if isinstance(value, (tuple, list)):
            if len(value) > d or not all(
                isinstance(v, (int, np.integer)) and 0 <= v < p for v in value
            ):
                raise CoefficientOutOfRing(
                    f"{value!r} is not a coefficient vector of length <= {d} over Z_{p}"
                )
            return int(sum(int(v) * p**i for i, v in enumerate(value)))
        raise CoefficientOutOfRing(f"{value!r} is not an element of {self}")

    def decode(self, code):
        return tuple(int(v) for v in self.digits(code))

    def format_element(self, code):
        return _format_zp_poly(self.decode(code), "t")

    @property
    def generator(self) -> Element:
        """The residue class of t."""
        if self.degree >= 2:
            return Element(self, self.p)
        return Element(self, (-self.modulus[0]) % self.p)

    def fp_coordinates(self):
        return self.p, self.digits(self.codes())


class ProductRing(Ring):
    def __init__(self, spec: Product, factors):
        super().__init__(spec)
        self.factors = tuple(factors)
        sizes = [f.order for f in self.factors]
        self.order = math.prod(sizes)
        self.characteristic = math.lcm(*(f.characteristic for f in self.factors))
        strides = [1] * len(sizes)
        for i in range(len(sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * sizes[i + 1]
        self._sizes = np.array(sizes, dtype=np.int64)
        self._strides = np.array(strides, dtype=np.int64)

    def split(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        return [(codes // s) % n for s, n in zip(self._strides, self._sizes)]

    def join(self, parts):
        out = 0
        for s, part in zip(self._strides, parts):
            out = out + np.asarray(part, dtype=np.int64) * s
        return out

    def _add_direct(self, a, b):
        return self.join(
            [f.add_codes(x, y) for f, x, y in zip(self.factors, self.split(a), self.split(b))]
        )

    def _mul_direct(self, a, b):
        return self.join(
            [f.mul_codes(x, y) for f, x, y in zip(self.factors, self.split(a), self.split(b))]
        )

    def _neg_direct(self, a):
        return self.join([f.neg_codes(x) for f, x in zip(self.factors, self.split(a))])

    def encode(self, value) -> int:
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            parts = [f.encode(value) for f in self.factors]
        elif isinstance(value, (tuple, list)) and len(value) == len(self.factors):
            parts = [f.encode(v) for f, v in zip(self.factors, value)]
        else:
            raise CoefficientOutOfRing(
                f"{value!r} is not a {len(self.factors)}-tuple for {self}"
            )
        return int(self.join(parts))

    def decode(self, code):
        return tuple(f.decode(int(c)) for f, c in zip(self.factors, self.split(code)))

    def format_element(self, code):
        parts = []
        for f, c in zip(self.factors, self.split(code)):
            s = f.format_element(int(c))
            parts.append(f"({s})" if "+" in s and not s.startswith("(") else s)
        return f"({','.join(parts)})"

    def project(self, i: int, codes):
        return self.split(codes)[i]

    def fp_coordinates(self):
        coords = [f.fp_coordinates() for f in self.factors]
        if any(c is None for c in coords) or len({c[0] for c in coords}) != 1:
            return None
        parts = self.split(self.codes())
        return coords[0][0], np.concatenate(
            [c[1][part] for c, part in zip(coords, parts)], axis=1
        )


def _pad(coeffs, d):
    return tuple(coeffs) + (0,) * (d - len(coeffs))


def _format_zp_poly(coeffs, var):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


@functools.lru_cache(maxsize=256)
def build_ring(spec: RingSpec) -> Ring:
    """Validate ``spec`` and return its (cached, immutable) ring handle."""
    if isinstance(spec, Zn):
        if spec.n < 2:
            raise ZeroRing(f"Z{spec.n} is not a nonzero ring")
        return ZnRing(spec)
    if isinstance(spec, (Gf, Quot)):
        if not isprime(spec.p):
            raise NotPrime(f"{spec.p} is not prime")
        f = spec.modulus
        if len(f) < 2 or f[-1] != 1:
            raise InvalidModulus(f"modulus must be monic of degree >= 1, got {f}")
        if isinstance(spec, Gf):
            if len(f) - 1 != spec.k:
                raise InvalidModulus(f"modulus degree {len(f) - 1} != k = {spec.k}")
            if not is_irreducible(f, spec.p):
                raise ReducibleModulus(f"{_format_zp_poly(f, 'x')} is reducible over Z_{spec.p}")
        return PolyQuotientRing(spec, spec.p, f)
    if isinstance(spec, Product):
        if not spec.factors:
            raise EmptyProduct("a product needs at least one factor")
        return ProductRing(spec, [build_ring(f) for f in spec.factors])
    raise TypeError(f"not a ring spec: {spec!r}")


def arith(op: str, a: Element, b: Element | None = None) -> Element:
    ring = a.ring
    if op == "neg":
        return ring.neg(a)
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if not isinstance(b, Element) or b.ring is not ring:
        raise RingMismatch("operands live in different rings")
    return {"add": ring.add, "sub": ring.sub, "mul": ring.mul}[op](a, b)


def enumerate_elements(ring: Ring) -> list:
    return ring.elements()


def annihilator(ring: Ring, a) -> list:
    """{y : a*y == 0}, in canonical order."""
    return [Element(ring, c) for c in ring.annihilator_codes(ring(a).code)]


def prime_subring(ring: Ring) -> list:
    """Additive closure of 1: ``[0, 1, 1+1, ...]``."""
    return [Element(ring, c) for c in ring.prime_subring_codes()]


# --- axiom checking ---------------------------------------------------------


@dataclass
class AxiomReport:
    passed: bool
    law: str | None = None
    witness: tuple | None = None

    def __str__(self):
        if self.passed:
            return "pass"
        return f"fail: {self.law} at {self.witness}"


def verify_tables(add, mul, zero: int, one: int) -> AxiomReport:
    """Exhaustively check the commutative-ring axioms on raw operation tables.

    Returns the first failing law with a witness tuple of codes.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    r = np.arange(n)

    def first(mask):
        idx = np.argwhere(mask)
        return tuple(int(i) for i in idx[0])

    for name, t in (("addition", add), ("multiplication", mul)):
        bad = t != t.T
        if bad.any():
            return AxiomReport(False, f"commutativity of {name}", first(bad))
    bad = add[zero] != r
    if bad.any():
        return AxiomReport(False, "additive identity", (int(np.flatnonzero(bad)[0]),))
    bad = mul[one] != r
    if bad.any():
        return AxiomReport(False, "multiplicative identity", (int(np.flatnonzero(bad)[0]),))
    bad = ~(add == zero).any(axis=1)
    if bad.any():
        return AxiomReport(False, "additive inverse", (int(np.flatnonzero(bad)[0]),))

    block = max(1, 2**21 // (n * n))
    for start in range(0, n, block):
        a = r[start : start + block, None, None]
        b = r[None, :, None]
        c = r[None, None, :]
        checks = (
            ("associativity of addition", add[add[a, b], c] != add[a, add[b, c]]),
            ("associativity of multiplication", mul[mul[a, b], c] != mul[a, mul[b, c]]),
            ("distributivity", mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]),
        )
        for name, bad in checks:
            if bad.any():
                i, j, k = first(bad)
                return AxiomReport(False, name, (i + start, j, k))
    return AxiomReport(True)


def verify_ring_axioms(ring: Ring, cutoff: int = AXIOM_CUTOFF) -> AxiomReport:
    if ring.order > cutoff:
        raise TooLarge(f"order {ring.order} exceeds axiom-check cutoff {cutoff}")
    return verify_tables(ring.add_table, ring.mul_table, 0, ring.one_code)
