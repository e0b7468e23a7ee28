"""Hot numeric kernels: NTT convolution mod word-size primes and mod-p scans.

Two interchangeable backends:

* numba (default when installed): jitted loops, selected automatically;
* pure numpy: vectorized fallback, forced with MAASSLIFT_FORCE_NUMPY=1.

Everything here works on int64 numpy arrays with moduli below 2^31, so all
intermediate products fit in int64.  Exact big-integer convolution is exposed
through multi-prime CRT reconstruction on top of the per-prime transforms.
"""

import os

import numpy as np

from . import ntt_numpy as _np_backend

FORCE_NUMPY = os.environ.get("MAASSLIFT_FORCE_NUMPY", "") not in ("", "0")

NUMBA_AVAILABLE = False
if not FORCE_NUMPY:
    try:
        from . import ntt_numba as _nb_backend

        NUMBA_AVAILABLE = True
    except ImportError:
        _nb_backend = None

_impl = _nb_backend if NUMBA_AVAILABLE else _np_backend
BACKEND = "numba" if NUMBA_AVAILABLE else "numpy"


def _is_probable_prime_small(n: int) -> bool:
    # deterministic for n < 3.2e18 with this base set
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# Primes q = c*2^21 + 1 < 2^31 support transforms up to length 2^21 (59 of
# them exist); the two fixed large ones cover mod-p work at length up to 2^26.
_NTT_S = 21
_PRIME_POOL: list[int] = []
_GENERATORS: dict[int, int] = {}
FIXED_PRIMES = (2013265921, 469762049)  # 15*2^27+1, 7*2^26+1


def _find_generator(q: int) -> int:
    g = _GENERATORS.get(q)
    if g is not None:
        return g
    m = q - 1
    fac = set()
    t = m
    d = 2
    while d * d <= t:
        if t % d == 0:
            fac.add(d)
            while t % d == 0:
                t //= d
        d += 1
    if t > 1:
        fac.add(t)
    g = 2
    while True:
        if all(pow(g, m // r, q) != 1 for r in fac):
            _GENERATORS[q] = g
            return g
        g += 1


def ntt_primes(count: int) -> list[int]:
    """First ``count`` NTT primes c*2^22+1 below 2^31 (descending c)."""
    c = (1 << 31) >> _NTT_S
    if c % 2 == 0:
        c -= 1
    while len(_PRIME_POOL) < count:
        while True:
            q = (c << _NTT_S) + 1
            c -= 2
            if q < (1 << 24):
                raise RuntimeError("NTT prime pool exhausted")
            if _is_probable_prime_small(q) and q not in _PRIME_POOL:
                _PRIME_POOL.append(q)
                break
    return _PRIME_POOL[:count]


def root_of_unity(q: int, n: int) -> int:
    """Primitive n-th root of unity mod q (n a power of two dividing q-1)."""
    if (q - 1) % n:
        raise ValueError(f"no order-{n} root mod {q}")
    return pow(_find_generator(q), (q - 1) // n, q)


def ntt(a, q, root):
    return _impl.ntt(np.asarray(a, dtype=np.int64), q, root)


def intt(a, q, root):
    return _impl.intt(np.asarray(a, dtype=np.int64), q, root)


def factorials_mod(n: int, p: int) -> np.ndarray:
    return _impl.factorials_mod(n, p)


def charsum_powers(chi: np.ndarray, jmax: int, qs) -> np.ndarray:
    return _impl.charsum_powers(chi, jmax, np.asarray(qs, dtype=np.int64))


def _convolve_one_prime(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    return _impl.convolve_ntt(a, b, q, root_of_unity)


def convolve_mod(a, b, p: int) -> np.ndarray:
    """Linear convolution of residue arrays, reduced mod p (p odd, p^2*len < 2^117).

    Uses the two fixed primes when the unreduced convolution provably fits
    below their product, else falls back to :func:`convolve_int` + reduction.
    """
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    bound = min(len(a), len(b)) * (p - 1) * (p - 1)
    q1, q2 = FIXED_PRIMES
    if bound < q1 * q2:
        c1 = _convolve_one_prime(a, b, q1)
        c2 = _convolve_one_prime(a, b, q2)
        # CRT: x = c1 + q1 * ((c2 - c1) * q1^{-1} mod q2); x < q1*q2 < 2^63
        inv = pow(q1, q2 - 2, q2)
        t = ((c2 - c1) * inv) % q2
        return (c1 + q1 * t) % p
    vals = convolve_int([int(x) for x in a], [int(x) for x in b])
    return np.array([v % p for v in vals], dtype=np.int64)


_SCHOOLBOOK_CUTOFF = 96


def convolve_int(a: list, b: list) -> list:
    """Exact linear convolution of Python integer sequences (any magnitude)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) * max(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF * _SCHOOLBOOK_CUTOFF // 4:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return out
    max_a = max(abs(x) for x in a)
    max_b = max(abs(x) for x in b)
    if max_a == 0 or max_b == 0:
        return [0] * (len(a) + len(b) - 1)
    bound = 2 * min(len(a), len(b)) * max_a * max_b + 1
    primes: list[int] = []
    prod = 1
    k = 1
    while prod <= bound:
        primes = ntt_primes(k)
        prod = 1
        for q in primes:
            prod *= q
        k += 1
    residues = []
    for q in primes:
        aq = np.array([x % q for x in a], dtype=np.int64)
        bq = np.array([x % q for x in b], dtype=np.int64)
        residues.append(_convolve_one_prime(aq, bq, q))
    # incremental CRT, then symmetric lift
    n_out = len(a) + len(b) - 1
    out = [int(residues[0][i]) for i in range(n_out)]
    mod = primes[0]
    for t in range(1, len(primes)):
        q = primes[t]
        inv = pow(mod % q, q - 2, q)
        res = residues[t]
        for i in range(n_out):
            d = ((int(res[i]) - out[i]) * inv) % q
            out[i] += mod * d
        mod *= q
    half = mod // 2
    return [v - mod if v > half else v for v in out]


def series_inverse_mod(f: np.ndarray, n: int, p: int) -> np.ndarray:
    """g with f*g = 1 mod (x^n, p), by Newton iteration; f[0] must be a unit."""
    f = np.asarray(f, dtype=np.int64) % p
    if f[0] % p == 0:
        raise ZeroDivisionError("constant term not invertible")
    g = np.array([pow(int(f[0]), p - 2, p)], dtype=np.int64)
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        fg = convolve_mod(f[:m2], g, p)[:m2]
        # h = 2 - f*g, then g <- g*h truncated
        h = (-fg) % p
        h[0] = (h[0] + 2) % p
        g = convolve_mod(g, h, p)[:m2]
        m = m2
    return g[:n]


# --- quadratic character tables ---------------------------------------------

_CHI4 = np.array([0, 1, 0, -1], dtype=np.int8)
_CHI8 = np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int8)
_CHI8N = np.array([0, 1, 0, 1, 0, -1, 0, -1], dtype=np.int8)


def quad_char_table(d0: int, n: int) -> np.ndarray:
    """Values chi_{d0}(a) for a = 0..n as int8, d0 a fundamental discriminant.

    Built from the prime-discriminant factorization of d0, so each entry is
    a product of Legendre-symbol table lookups (all vectorized).
    """
    if d0 == 1:
        return np.ones(n + 1, dtype=np.int8)
    a = np.arange(n + 1, dtype=np.int64)
    out = np.ones(n + 1, dtype=np.int8)
    m = abs(d0)
    v2 = 0
    while m % 2 == 0:
        m //= 2
        v2 += 1
    odd_primes = []
    t = m
    d = 3
    while d * d <= t:
        if t % d == 0:
            odd_primes.append(d)
            t //= d
            if t % d == 0:
                raise ValueError(f"{d0} is not a fundamental discriminant")
        d += 2
    if t > 1:
        odd_primes.append(t)
    sign = -1 if d0 < 0 else 1
    for pp in odd_primes:
        qr = np.zeros(pp, dtype=np.int8)
        r = (np.arange(1, pp, dtype=np.int64) ** 2) % pp
        qr[r] = 1
        qr[qr == 0] = -1
        qr[0] = 0
        out = out * qr[a % pp]
        if pp % 4 == 3:
            sign = -sign
    if v2 == 2:
        out = out * _CHI4[a % 4]
        sign = -sign
    elif v2 == 3:
        # 2-part is +8 or -8 depending on the remaining sign
        if sign == 1:
            out = out * _CHI8[a % 8]
        else:
            out = out * _CHI8N[a % 8]
            sign = 1
    elif v2 != 0:
        raise ValueError(f"{d0} is not a fundamental discriminant")
    if sign != 1:
        raise ValueError(f"{d0} is not a fundamental discriminant")
    return out.astype(np.int8)
