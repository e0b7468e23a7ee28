"""Integer utilities: primality, factorization, Kronecker symbols, valuations.

Everything is exact.  Primality is deterministic Miller-Rabin below 3.3e24
(standard witness set) and 40-round probabilistic above, which is what the
discriminant check consumes; factorization is trial division backed by
Pollard-Brent rho on the remaining cofactor.
"""

import math
from fractions import Fraction

from ..errors import DomainError

# Witnesses proving primality for all n < 3_317_044_064_679_887_385_961_981.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _mr_witness(a: int, d: int, s: int, n: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_BOUND:
        bases = _MR_BASES
    else:
        # deterministic seeding keeps reports reproducible
        bases = tuple(3 + 2 * ((41 * i + 7) % (n - 4)) for i in range(40))
    return not any(_mr_witness(a % n, d, s, n) for a in bases if a % n > 1)


def next_prime(n: int) -> int:
    n += 1
    if n <= 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_probable_prime(n):
        n += 2
    return n


def primes_up_to(n: int) -> list:
    """All primes <= n by plain sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, n + 1, p))
    return [i for i in range(n + 1) if sieve[i]]


def smallest_prime_factor_sieve(n: int) -> list:
    """spf[i] = smallest prime factor of i (spf[0] = spf[1] = 1)."""
    spf = list(range(n + 1))
    spf[0] = spf[1] = 1
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        y, c, m = (seed * 2 + 1) % n, (seed * 2 + 3) % n, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        seed += 1


def factorize(n: int, trial_bound: int = 10_000_000) -> dict:
    """Prime factorization {p: e} of |n| (n != 0).

    Trial division up to ``trial_bound``, then Miller-Rabin plus Pollard-Brent
    on whatever cofactor survives.  Factors found by rho are certified prime
    with the same Miller-Rabin routine before being reported.
    """
    if n == 0:
        raise DomainError("cannot factor 0")
    n = abs(n)
    out: dict = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel mod 6
    d = 7
    step = 4
    while d <= trial_bound and d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        g = _pollard_brent(m)
        stack.append(g)
        stack.append(m // g)
    return dict(sorted(out.items()))


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def frac_valuation(x: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise DomainError("valuation of 0 is infinite")
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def kronecker(a: int, n: int):
    """Kronecker symbol (a/n), completely multiplicative in n, (a/0)=[|a|=1]."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # strip factors of 2 from n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # now n odd positive; Jacobi symbol by reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def is_fundamental_discriminant(d: int) -> bool:
    """True for discriminants of quadratic fields (1 counts as trivial)."""
    if d == 1:
        return True
    if d % 4 == 1:
        return _is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    for p, e in factorize(n, trial_bound=100_000).items():
        if e > 1:
            return False
    return True


def fundamental_decomposition(n: int):
    """Write n (a nonzero discriminant) as d0 * f^2 with d0 fundamental."""
    if n == 0 or n % 4 in (2, 3):
        raise DomainError(f"{n} is not a discriminant")
    f = 1
    for p, e in factorize(abs(n)).items():
        f *= p ** (e // 2)
    d0 = n // (f * f)
    while d0 % 4 in (2, 3):
        f //= 2
        d0 = n // (f * f)
    return d0, f
