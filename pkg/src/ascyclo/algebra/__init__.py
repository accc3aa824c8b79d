"""Exact arithmetic in F_q, F_q[T] and F_q(T)."""

from .field import (
    FieldSpec,
    FqElem,
    absolute_trace,
    factorint,
    field_from_q,
    field_make,
    is_prime,
    pth_root,
)
from .grammar import format_poly, format_ratfunc, parse_poly, parse_ratfunc
from .poly import (
    NEG_INF,
    Poly,
    PrimePoly,
    enumerate_monic_irreducibles,
    factor,
    gcd,
    invmod,
    is_irreducible,
    monic_irreducibles,
    squarefree_decomposition,
    xgcd,
    monic_polys,
    mulmod,
    poly_divmod,
    powmod,
)
from .ratfunc import (
    INFINITY,
    InfinitePrime,
    RatFunc,
    from_p_adic_digits,
    multiplicity,
    p_adic_digits,
    partial_fractions,
    recombine,
    valuation,
)

__all__ = [
    "FieldSpec", "FqElem", "absolute_trace", "factorint", "field_from_q", "field_make",
    "is_prime", "pth_root", "format_poly", "format_ratfunc", "parse_poly", "parse_ratfunc",
    "NEG_INF", "Poly", "PrimePoly", "enumerate_monic_irreducibles", "factor", "gcd",
    "invmod", "is_irreducible", "monic_irreducibles", "monic_polys", "mulmod", "poly_divmod", "powmod",
    "squarefree_decomposition", "xgcd",
    "INFINITY", "InfinitePrime", "RatFunc", "from_p_adic_digits", "multiplicity",
    "p_adic_digits", "partial_fractions", "recombine", "valuation",
]
