"""Pure-numpy number theoretic transform over word-size primes.

All moduli are NTT primes q = c*2^s + 1 with q < 2^31, so products of two
reduced residues fit in int64 without overflow.  Arrays are int64 throughout.
"""

import numpy as np

_REV_CACHE: dict[int, np.ndarray] = {}


def _bit_reverse_indices(n: int) -> np.ndarray:
    idx = _REV_CACHE.get(n)
    if idx is None:
        bits = n.bit_length() - 1
        idx = np.zeros(n, dtype=np.int64)
        for b in range(bits):
            idx |= ((np.arange(n) >> b) & 1) << (bits - 1 - b)
        _REV_CACHE[n] = idx
    return idx


def _power_table(w: int, count: int, q: int) -> np.ndarray:
    """[w^0, w^1, ..., w^{count-1}] mod q, built by doubling."""
    tab = np.array([1], dtype=np.int64)
    while len(tab) < count:
        step = (int(tab[-1]) * w) % q
        tab = np.concatenate([tab, (tab * step) % q])
    return tab[:count]


def ntt(a: np.ndarray, q: int, root: int) -> np.ndarray:
    """In-order forward transform of length len(a) (a power of two).

    ``root`` must be a primitive len(a)-th root of unity mod q.
    """
    n = len(a)
    out = a[_bit_reverse_indices(n)].astype(np.int64)
    wfull = _power_table(root, n // 2 if n > 1 else 1, q)
    size = 2
    while size <= n:
        half = size >> 1
        wtab = wfull[:: n // size][:half]
        out = out.reshape(-1, size)
        lo = out[:, :half]
        hi = (out[:, half:] * wtab) % q
        out[:, half:] = (lo - hi) % q
        out[:, :half] = (lo + hi) % q
        out = out.reshape(-1)
        size <<= 1
    return out


def intt(a: np.ndarray, q: int, root: int) -> np.ndarray:
    """Inverse of :func:`ntt` for the same (q, root)."""
    n = len(a)
    inv_root = pow(root, q - 2, q)
    out = ntt(a, q, inv_root)
    n_inv = pow(n, q - 2, q)
    return (out * n_inv) % q


def convolve_ntt(a: np.ndarray, b: np.ndarray, q: int, root_of: "callable") -> np.ndarray:
    """Full linear convolution of int64 arrays reduced mod q."""
    n_out = len(a) + len(b) - 1
    size = 1
    while size < n_out:
        size <<= 1
    root = root_of(q, size)
    fa = np.zeros(size, dtype=np.int64)
    fb = np.zeros(size, dtype=np.int64)
    fa[: len(a)] = a % q
    fb[: len(b)] = b % q
    fa = ntt(fa, q, root)
    fb = ntt(fb, q, root)
    fc = (fa * fb) % q
    return intt(fc, q, root)[:n_out]


def factorials_mod(n: int, p: int) -> np.ndarray:
    """[0!, 1!, ..., n!] mod p (chunked python loop; numba backend is faster)."""
    out = np.empty(n + 1, dtype=np.int64)
    acc = 1
    out[0] = 1
    for i in range(1, n + 1):
        acc = (acc * i) % p
        out[i] = acc
    return out


def charsum_powers(chi: np.ndarray, jmax: int, qs: np.ndarray) -> np.ndarray:
    """out[j-1][t] = sum_a chi[a] * a^j mod qs[t], for j = 1..jmax.

    ``chi`` is an int8/int64 array of character values on 0..N (index = argument).
    """
    n = len(chi) - 1
    a = np.arange(n + 1, dtype=np.int64)
    sign = chi.astype(np.int64)
    out = np.zeros((jmax, len(qs)), dtype=np.int64)
    for t, q in enumerate(qs):
        q = int(q)
        x = np.ones(n + 1, dtype=np.int64)
        am = a % q
        for j in range(1, jmax + 1):
            x = (x * am) % q
            out[j - 1][t] = int(np.sum(sign * x) % q)
    return out % qs[None, :]
