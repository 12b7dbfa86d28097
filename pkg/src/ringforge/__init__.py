"""Computer algebra for finite commutative rings with identity.

Rings ``Z_n``, ``GF(p^k)``, ``Z_p[t]/(f)`` and finite products thereof,
univariate polynomial arithmetic over them, and exhaustive tools for
vanishing polynomials, minimal monic vanishing degrees and root counting.
"""

from .errors import *  # noqa: F401,F403
from .parsing import format_ring_spec, parse_element, parse_poly, parse_ring_spec
from .poly import (
    FunctionTable,
    Polynomial,
    decompose_over_product,
    divrem,
    eval_poly,
    formal_derivative,
    from_roots,
    function_table,
    function_tables,
    poly_arith,
    recombine,
)
from .rings import (
    Element,
    Gf,
    Product,
    Quot,
    Ring,
    Zn,
    annihilator,
    arith,
    build_ring,
    enumerate_elements,
    is_irreducible,
    prime_subring,
    verify_ring_axioms,
)


def ring(text: str) -> Ring:
    """Shorthand for ``build_ring(parse_ring_spec(text))``."""
    return build_ring(parse_ring_spec(text))


def poly(text: str, R: Ring) -> Polynomial:
    return parse_poly(text, R)


__version__ = "0.1.0"
