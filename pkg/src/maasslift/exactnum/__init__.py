"""Exact arithmetic foundation: rationals, polynomials, number fields, F_p.

BigRational is stdlib Fraction (already reduced, positive denominator), so the
module only adds what the standard library lacks: polynomials over explicit
rings, division-free characteristic polynomials, factorization, and number
field arithmetic with degree-1 reduction maps.
"""

from fractions import Fraction

from ..errors import DomainError
from .integers import (
    factorize,
    frac_valuation,
    fundamental_decomposition,
    is_fundamental_discriminant,
    is_probable_prime,
    kronecker,
    next_prime,
    primes_up_to,
    smallest_prime_factor_sieve,
    valuation,
)
from .linalg import (
    charpoly,
    det,
    hermite_row_basis,
    identity,
    integer_kernel,
    kernel_basis,
    mat_mul,
    mat_vec,
    rref,
    smith_normal_form,
    solve,
    transpose,
)
from .factor import (
    factor_rational_poly,
    fp_factor,
    fp_gcd,
    fp_powmod,
    fp_roots,
    is_irreducible_rational,
    poly_to_int_primitive,
)
from .numberfield import (
    NFElement,
    NumberField,
    PrimeField,
    PrimeFieldElement,
    nf_reduce_deg1,
    nf_valuation,
)
from .poly import Poly, QQ, discriminant as _poly_disc, resultant

BigRational = Fraction


def poly_discriminant(f: Poly) -> Fraction:
    """Discriminant of a rational polynomial, via the resultant with f'."""
    if f.is_zero():
        raise DomainError("discriminant of the zero polynomial")
    if f.degree < 1:
        raise DomainError("discriminant needs degree >= 1")
    return Fraction(_poly_disc(f))


def roots_mod_p(f: Poly, p: int) -> set:
    """Exact set of roots of f mod p.

    Small p: exhaustive evaluation.  Large p: gcd with x^p - x followed by
    deterministic equal-degree splitting.  Both paths are exact.
    """
    if f.is_zero():
        raise DomainError("zero polynomial")
    if not is_probable_prime(p):
        raise DomainError(f"{p} is not prime")
    coeffs = []
    for c in f.coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise DomainError(f"{p} divides a denominator of the polynomial")
        coeffs.append(c.numerator * pow(c.denominator % p, p - 2, p) % p)
    if coeffs[-1] == 0:
        raise DomainError(f"{p} divides the leading coefficient")
    return set(fp_roots(coeffs, p))


__all__ = [
    "BigRational",
    "DomainError",
    "Fraction",
    "NFElement",
    "NumberField",
    "Poly",
    "PrimeField",
    "PrimeFieldElement",
    "QQ",
    "charpoly",
    "det",
    "factor_rational_poly",
    "factorize",
    "fp_factor",
    "fp_gcd",
    "fp_powmod",
    "fp_roots",
    "frac_valuation",
    "fundamental_decomposition",
    "hermite_row_basis",
    "identity",
    "integer_kernel",
    "is_fundamental_discriminant",
    "is_irreducible_rational",
    "is_probable_prime",
    "kernel_basis",
    "kronecker",
    "mat_mul",
    "mat_vec",
    "next_prime",
    "nf_reduce_deg1",
    "nf_valuation",
    "poly_discriminant",
    "poly_to_int_primitive",
    "primes_up_to",
    "resultant",
    "roots_mod_p",
    "rref",
    "smallest_prime_factor_sieve",
    "smith_normal_form",
    "solve",
    "transpose",
    "valuation",
]
