"""The explicit correspondence maps and Euler-factor constructors.

shimura_lift sends a plus-space form to weight 2k-2 by the divisor sum
sum_{d|n} (D/d) d^(k-2) c(|D| n^2/d^2); maass_lift produces the genus-2
Fourier table A(n,r,m) = sum_{d | (n,r,m)} d^(k-1) c((r^2-4nm)/d^2); the
spinor (degree 4) and twisted standard (degree 5) Euler factors are expanded
purely through the symmetric functions alpha + beta = a(ell),
alpha*beta = ell^(2k-3), so everything stays inside the eigenfield.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PrecisionError
from .exactnum import Poly, QQ, is_fundamental_discriminant, kronecker
from .jacobi import JacobiForm1, KohnenForm
from .qexp import QExpansion
from .siegel import SiegelExpansion, reduce_form


def shimura_lift(g: KohnenForm, disc: int, k: int, prec: int) -> QExpansion:
    """zeta_D g = sum_n ( sum_{d|n} (D/d) d^(k-2) c_g(|D| n^2 / d^2) ) q^n."""
    if not is_fundamental_discriminant(disc):
        raise DomainError(f"{disc} is not a fundamental discriminant")
    if ((-1) ** (k - 1)) * disc <= 0:
        raise DomainError(f"need (-1)^(k-1) D > 0, got D = {disc} at k = {k}")
    if g.prec < abs(disc) * (prec - 1) ** 2:
        raise PrecisionError(
            f"plus-space precision {g.prec} below |D| prec^2 = {abs(disc) * (prec - 1) ** 2}"
        )
    ad = abs(disc)
    out = [Fraction(0)]
    for n in range(1, prec):
        acc = Fraction(0)
        for d in range(1, n + 1):
            if n % d:
                continue
            chi = kronecker(disc, d)
            if chi:
                acc += chi * d ** (k - 2) * g.a(ad * (n // d) ** 2)
        out.append(acc)
    return QExpansion(2 * k - 2, out)


def maass_lift(g: KohnenForm, k: int, bound: int) -> SiegelExpansion:
    """Saito-Kurokawa Fourier table from plus-space coefficients.

    Stores every reduced triple with m <= bound plus the (0|1, r, m) rows out
    to m <= bound^2, which is exactly what maass_check and the Phi operator
    read back; hence the g precision requirement 4*bound^2.
    """
    if g.prec < 4 * bound * bound:
        raise PrecisionError(
            f"plus-space precision {g.prec} below 4*bound^2 = {4 * bound * bound}"
        )
    if k != g.k:
        raise DomainError(f"weight mismatch: plus-space form has k = {g.k}")

    def coefficient(n, r, m):
        gcd = math.gcd(math.gcd(n, r), m)
        if gcd == 0:
            return Fraction(0)
        acc = Fraction(0)
        for d in range(1, gcd + 1):
            if gcd % d:
                continue
            nn = 4 * n * m - r * r
            acc += Fraction(d) ** (k - 1) * _c_at(g, nn // (d * d))
        return acc

    coeffs = {}
    for m in range(bound + 1):
        for n in range(m + 1):
            for r in range(n + 1):
                if r * r > 4 * n * m or reduce_form(n, r, m) != (n, r, m):
                    continue
                coeffs[(n, r, m)] = coefficient(n, r, m)
    for m in range(bound * bound + 1):
        for n in (0, 1):
            for r in range(n + 1):
                key = reduce_form(n, r, m) if r * r <= 4 * n * m else None
                if key is None or key in coeffs or key != (n, r, m):
                    continue
                coeffs[key] = coefficient(n, r, m)
    return SiegelExpansion(k, bound, coeffs)


def _c_at(g: KohnenForm, n: int):
    if n < 0:
        raise DomainError("negative |D| requested")
    if n == 0:
        return Fraction(0)  # cusp forms only; Eisenstein data enters via tables
    return g.a(n)


def eisenstein_sk_expansion(k: int, bound: int, d_max: int = None) -> SiegelExpansion:
    """Maass-relation extension of the Cohen-Eisenstein coefficients H(k-1, .).

    A non-cuspidal Maass-space fixture (the Saito-Kurokawa Eisenstein lift):
    A(n,r,m) = sum_{d | (n,r,m)} d^(k-1) H(k-1, (4nm-r^2)/d^2).  The constant
    term is zeta(3-2k) zeta(1-k)/2, the unique value making Phi(F) a scalar
    multiple of E_k (checked coefficientwise in the tests).
    """
    from .jacobi import cohen_table
    from .lfun.bernoulli import rational_bernoulli

    if d_max is None:
        d_max = 4 * bound * bound
    table = cohen_table(k - 1, d_max)

    def coefficient(n, r, m):
        gcd = math.gcd(math.gcd(n, r), m)
        if gcd == 0:
            zeta_3_2k = table[0]
            zeta_1_k = -rational_bernoulli(k) / k
            return zeta_3_2k * zeta_1_k / 2
        acc = Fraction(0)
        for d in range(1, gcd + 1):
            if gcd % d:
                continue
            acc += Fraction(d) ** (k - 1) * table[(4 * n * m - r * r) // (d * d)]
        return acc

    coeffs = {}
    for m in range(bound + 1):
        for n in range(m + 1):
            for r in range(n + 1):
                if r * r > 4 * n * m or reduce_form(n, r, m) != (n, r, m):
                    continue
                val = coefficient(n, r, m)
                if val is not None:
                    coeffs[(n, r, m)] = val
    for m in range(bound * bound + 1):
        for n in (0, 1):
            for r in range(n + 1):
                if r * r > 4 * n * m:
                    continue
                key = reduce_form(n, r, m)
                if key in coeffs or key != (n, r, m):
                    continue
                val = coefficient(n, r, m)
                if val is not None:
                    coeffs[key] = val
    return SiegelExpansion(k, bound, coeffs)


def v_operator(phi: JacobiForm1, m: int, prec: int) -> dict:
    """Index-shift V_m: {(n, r): c'(n, r)} with c' = sum d^(k-1) c(D/d^2).

    Keys run over 0 <= n < prec and r^2 <= 4nm; V_1 is the identity on
    coefficient tables.
    """
    if m < 1:
        raise DomainError("index shift needs m >= 1")
    k = phi.weight
    needed = 4 * (prec - 1) * m
    if phi.d_max < needed:
        raise PrecisionError(f"discriminant range {phi.d_max} below {needed}")
    out = {}
    for n in range(prec):
        rmax = math.isqrt(4 * n * m)
        for r in range(-rmax, rmax + 1):
            gcd = math.gcd(math.gcd(n, r), m)
            acc = Fraction(0)
            for d in range(1, gcd + 1):
                if gcd % d:
                    continue
                acc += Fraction(d) ** (k - 1) * phi.c((r * r - 4 * n * m) // (d * d))
            out[(n, r)] = acc
    return out


@dataclass(frozen=True)
class EulerFactor:
    """A local factor as a polynomial with constant term 1."""

    ell: int
    poly: Poly
    tag: str  # "spinor" | "standard" | "elliptic" | "dirichlet"

    def __post_init__(self):
        if self.poly.is_zero() or self.poly[0] != self.poly.ring.one:
            raise DomainError("Euler factor must have constant term 1")


def _ring_of(a):
    if isinstance(a, (int, Fraction)):
        return QQ, Fraction(a)
    return a.field, a


def spinor_euler_factor(a, k: int, ell: int) -> EulerFactor:
    """(1 - ell^(k-1) x)(1 - ell^(k-2) x)(1 - a x + ell^(2k-3) x^2)."""
    ring, a = _ring_of(a)
    one = ring.one
    p1 = Poly([one, ring.coerce(-(ell ** (k - 1)))], ring)
    p2 = Poly([one, ring.coerce(-(ell ** (k - 2)))], ring)
    p3 = Poly([one, -a, ring.coerce(ell ** (2 * k - 3))], ring)
    return EulerFactor(ell, p1 * p2 * p3, "spinor")


def elliptic_euler_factor(a, w: int, ell: int, chi_ell=1, shift: int = 0) -> EulerFactor:
    """Local factor of L(s + shift, f, chi) at ell for a weight-w eigenform,
    written in t = ell^(-s): 1 - chi a ell^(-shift) t + chi^2 ell^(w-1-2 shift) t^2."""
    ring, a = _ring_of(a)
    c1 = -a * Fraction(chi_ell) * Fraction(ell) ** (-shift)
    c2 = ring.coerce(Fraction(chi_ell) ** 2 * Fraction(ell) ** (w - 1 - 2 * shift))
    return EulerFactor(ell, Poly([ring.one, c1, c2], ring), "elliptic")


def dirichlet_euler_factor(ell: int, chi_ell=1, shift: int = 0, ring=QQ) -> EulerFactor:
    """1 - chi(ell) ell^(-shift) t, the local factor of L(s + shift, chi)."""
    c = ring.coerce(-Fraction(chi_ell) * Fraction(ell) ** (-shift))
    return EulerFactor(ell, Poly([ring.one, c], ring), "dirichlet")


def standard_euler_factor(a, k: int, ell: int, chi_ell=1) -> EulerFactor:
    """W_ell(chi(ell) t) for the Saito-Kurokawa lift, t = ell^(-2s), degree 5.

    W_ell(t) = (1 - ell^2 t) prod_i (1 - ell^2 alpha_i t)(1 - ell^2/alpha_i t)
    with Satake data alpha_1 alpha_2 = 1/ell, alpha_1 + alpha_2 = a ell^(1-k);
    the quartic is expanded through the elementary symmetric functions of the
    four reciprocal roots, so no square roots ever appear and the coefficients
    live in the eigenfield of a.
    """
    ring, a = _ring_of(a)
    chi = Fraction(chi_ell)
    e1 = a * Fraction(ell) ** (1 - k)  # alpha_1 + alpha_2
    e2 = Fraction(1, ell)  # alpha_1 alpha_2
    l2 = Fraction(ell * ell)
    # symmetric functions of {l^2 a1, l^2 a2, l^2/a1, l^2/a2}
    s1 = e1 * (l2 * (1 + 1 / e2))
    s2 = ring.coerce(l2 * l2 * (e2 + 1 / e2)) + (e1 * e1) * (l2 * l2 / e2)
    s3 = e1 * (l2 * l2 * l2 * (1 + 1 / e2))
    s4 = ring.coerce(l2 ** 4)
    quartic = Poly(
        [ring.one, -s1 * chi, s2 * chi * chi, -s3 * chi**3, s4 * chi**4], ring
    )
    lin = Poly([ring.one, ring.coerce(-l2 * chi)], ring)
    poly = lin * quartic
    if chi != 0 and poly.degree != 5:
        raise RuntimeError("standard factor degree drift")
    return EulerFactor(ell, poly, "standard")
