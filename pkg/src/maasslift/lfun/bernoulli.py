"""Generalized Bernoulli numbers, Dirichlet L at non-positive integers,
Euler factor removal, and Bernoulli numbers mod p at scan scale.

Two independent routes to B_{n,chi} coexist on purpose: the generating
function sum_a chi(a) t e^{at} / (e^{Nt} - 1) (reference path, any exact
coefficient ring) and, for quadratic characters only, the power-sum formula
B_{n,chi} = sum_j C(n,j) B_{n-j} N^{n-1-j} S_j with S_j = sum_a chi(a) a^j
evaluated by the mod-prime kernels and CRT-reconstructed.  Tests pin the two
against each other.
"""

import math
from fractions import Fraction

import numpy as np

from .. import _kernels
from ..errors import DomainError
from ..exactnum import is_probable_prime
from .characters import DirichletChar

_TRIVIAL = DirichletChar.trivial(1)


def gen_bernoulli(n: int, chi: DirichletChar = _TRIVIAL):
    """B_{n,chi} from the generating function, exact over the value ring.

    With the trivial character mod 1 this is t e^t/(e^t - 1), so B_1 = +1/2
    and all other values agree with the classical Bernoulli numbers.
    """
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    N = chi.modulus
    # A(t)/t = sum_j S_j t^j / j!, with S_j = sum_a chi(a) a^j
    # denominator (e^{Nt}-1)/t = sum_j N^{j+1} t^j / (j+1)!
    s = [None] * (n + 1)
    zero = chi(1) - chi(1)  # ring zero
    for j in range(n + 1):
        acc = zero
        for a in range(1, N + 1):
            v = chi(a)
            if v == 0:
                continue
            acc = acc + v * Fraction(a**j)
        s[j] = acc
    num = [s[j] * Fraction(1, math.factorial(j)) for j in range(n + 1)]
    den = [Fraction(N ** (j + 1), math.factorial(j + 1)) for j in range(n + 1)]
    # power series division, schoolbook: small n only
    quot = []
    inv0 = Fraction(1, 1) / den[0]
    for k in range(n + 1):
        acc = num[k]
        for i in range(k):
            acc = acc - quot[i] * den[k - i]
        quot.append(acc * inv0)
    return quot[n] * Fraction(math.factorial(n))


_BERNOULLI_CACHE: list = [Fraction(1)]


def rational_bernoulli(n: int) -> Fraction:
    """Ordinary Bernoulli number B_n (B_1 = +1/2 convention), cached."""
    while len(_BERNOULLI_CACHE) <= n:
        m = len(_BERNOULLI_CACHE)
        if m == 1:
            _BERNOULLI_CACHE.append(Fraction(1, 2))
            continue
        if m % 2 == 1:
            _BERNOULLI_CACHE.append(Fraction(0))
            continue
        # sum_{j=0}^{m} C(m+1, j) B_j = 0 (B_1 = -1/2 convention), solved for B_m
        acc = Fraction(m + 1, 2) - 1
        for j in range(2, m, 2):
            acc -= math.comb(m + 1, j) * _BERNOULLI_CACHE[j]
        _BERNOULLI_CACHE.append(acc / (m + 1))
    return _BERNOULLI_CACHE[n]


def bernoulli_quadratic(n: int, d0: int) -> Fraction:
    """B_{n,chi_{d0}} for a fundamental discriminant d0, power-sum route.

    Character values and power sums run through the int64 kernels mod three
    NTT primes and are CRT-lifted, so conductors in the thousands stay cheap.
    """
    if d0 == 1:
        return gen_bernoulli(n)
    N = abs(d0)
    chi = _kernels.quad_char_table(d0, N)
    qs = np.array(_kernels.ntt_primes(_crt_prime_count(n, N)), dtype=np.int64)
    sums = _kernels.charsum_powers(chi, n, qs)
    s = [Fraction(0)] * (n + 1)
    for j in range(1, n + 1):
        s[j] = Fraction(_crt_signed([int(v) for v in sums[j - 1]], [int(q) for q in qs]))
    out = Fraction(0)
    for j in range(n + 1):
        b = rational_bernoulli(n - j)
        if b == 0:
            continue
        if n - j == 1:
            b = -b  # B_n(x) uses the B_1 = -1/2 convention
        out += math.comb(n, j) * b * Fraction(N, 1) ** (n - 1 - j) * s[j]
    return out


def _crt_prime_count(n: int, N: int) -> int:
    bound = 2 * N ** (n + 1) + 1
    count = 1
    while True:
        prod = 1
        for q in _kernels.ntt_primes(count):
            prod *= q
        if prod > bound:
            return count
        count += 1


def _crt_signed(residues, moduli) -> int:
    x, m = residues[0], moduli[0]
    for r, q in zip(residues[1:], moduli[1:]):
        t = (r - x) * pow(m % q, q - 2, q) % q
        x += m * t
        m *= q
    return x - m if x > m // 2 else x


def dirichlet_l_neg(s: int, chi: DirichletChar = _TRIVIAL):
    """L(s, chi) at an integer s = 1 - n <= 0, as -B_{n,chi}/n."""
    n = 1 - s
    if n < 1:
        raise DomainError("only non-positive integer arguments are exact here")
    return gen_bernoulli(n, chi) * Fraction(-1, n)


def remove_euler(value, s: int, chi: DirichletChar, f=None, sigma=()):
    """Multiply ``value`` by the Euler factors at the primes in sigma.

    Converts L(s, .) into L^Sigma(s, .): for a Dirichlet L this multiplies by
    (1 - chi(ell) ell^{-s}); with a newform f (anything exposing ``weight``
    and ``a(ell)``) by the degree-2 factor 1 - chi(ell) a(ell) ell^{-s}
    + chi(ell)^2 ell^{w-1-2s}.
    """
    for ell in sorted(set(sigma)):
        if not is_probable_prime(ell):
            raise DomainError(f"{ell} in Sigma is not prime")
        c = chi(ell)
        if f is None:
            factor = 1 - c * _int_pow(ell, -s)
        else:
            w = f.weight
            factor = 1 - c * f.a(ell) * _int_pow(ell, -s) + c * c * _int_pow(ell, w - 1 - 2 * s)
        if not factor:
            raise DomainError(f"vanishing Euler factor at {ell}")
        value = value * factor
    return value


def _int_pow(ell: int, e: int):
    return Fraction(ell) ** e


_BMODP_CACHE: dict = {}


def bernoulli_mod_p(n: int, p: int):
    """B_n mod p for even 2 <= n <= p-3, by power series inversion mod p."""
    from ..exactnum import PrimeFieldElement

    if not is_probable_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    if n > 0 and n % (p - 1) == 0:
        raise DomainError(f"von Staudt-Clausen pole: {p-1} divides {n}")
    if n % 2 or not 2 <= n <= p - 3:
        raise DomainError("index must be even with 2 <= n <= p-3")
    return PrimeFieldElement(int(_bernoulli_table(p)[n]), p)


def _bernoulli_table(p: int) -> np.ndarray:
    """B_n mod p for all 0 <= n <= p-3 at once (t/(e^t-1) inversion)."""
    table = _BMODP_CACHE.get(p)
    if table is not None:
        return table
    length = p - 2  # coefficients t^0 .. t^{p-3}
    fact = _kernels.factorials_mod(length, p)
    inv_fact = np.empty(length + 1, dtype=np.int64)
    inv_fact[length] = pow(int(fact[length]), p - 2, p)
    for i in range(length, 0, -1):
        inv_fact[i - 1] = inv_fact[i] * i % p
    # f = (e^t - 1)/t has j-th coefficient 1/(j+1)!
    f = inv_fact[1 : length + 1].copy()
    g = _kernels.series_inverse_mod(f, length, p)
    table = (g * fact[:length]) % p
    _BMODP_CACHE[p] = table
    return table


def bernoulli_mod_p_naive(n: int, p: int):
    """Single-index power-sum route: sum_{a<p} a^n = B_n p (mod p^2).

    O(p) modular exponentiations per index, so a full scan through it is
    O(p^2); it exists as an independent cross-check of the series table and
    as the slow path behind irregular_scan(..., naive=True).
    """
    from ..exactnum import PrimeFieldElement

    if not is_probable_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    if n > 0 and n % (p - 1) == 0:
        raise DomainError(f"von Staudt-Clausen pole: {p-1} divides {n}")
    if n % 2 or not 2 <= n <= p - 3:
        raise DomainError("index must be even with 2 <= n <= p-3")
    p2 = p * p
    s = 0
    for a in range(1, p):
        s += pow(a, n, p2)
    s %= p2
    if s % p:
        raise RuntimeError("power-sum identity violated")
    return PrimeFieldElement(s // p, p)


def irregular_scan(p: int, naive: bool = False) -> list:
    """All even n <= p-3 with p | B_n (empty for regular primes).

    Default is the series table (one inversion, O(p log p)); naive=True runs
    the O(p^2) power-sum route index by index, desk-viable for small p only.
    """
    if not is_probable_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    if p <= 5:
        return []
    if naive:
        return [n for n in range(2, p - 2, 2) if bernoulli_mod_p_naive(n, p).residue == 0]
    table = _bernoulli_table(p)
    hits = np.nonzero(table[2 : p - 2 : 2] == 0)[0]
    return [int(2 + 2 * i) for i in hits]
