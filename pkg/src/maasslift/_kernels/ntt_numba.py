"""Numba-jitted counterparts of the numpy NTT kernels.

Only imported when numba is installed and MAASSLIFT_FORCE_NUMPY is unset.
The algorithms mirror ntt_numpy exactly; tests assert the two backends agree.
"""

import numpy as np
from numba import njit

_OPTS = dict(cache=True, nogil=True)


@njit(**_OPTS)
def _bit_reverse_inplace(a):
    n = len(a)
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            a[i], a[j] = a[j], a[i]


@njit(**_OPTS)
def _ntt_core(a, q, root):
    n = len(a)
    _bit_reverse_inplace(a)
    size = 2
    while size <= n:
        half = size >> 1
        # w_step = root^(n/size): primitive size-th root of unity
        w_step = 1
        e = n // size
        base = root
        while e > 0:
            if e & 1:
                w_step = (w_step * base) % q
            base = (base * base) % q
            e >>= 1
        for start in range(0, n, size):
            w = 1
            for i in range(start, start + half):
                lo = a[i]
                hi = (a[i + half] * w) % q
                a[i] = (lo + hi) % q
                a[i + half] = (lo - hi) % q
                w = (w * w_step) % q
        size <<= 1


@njit(**_OPTS)
def _modpow(b, e, q):
    r = 1
    b %= q
    while e > 0:
        if e & 1:
            r = (r * b) % q
        b = (b * b) % q
        e >>= 1
    return r


def ntt(a: np.ndarray, q: int, root: int) -> np.ndarray:
    out = (a % q).astype(np.int64)
    _ntt_core(out, q, root)
    return out


def intt(a: np.ndarray, q: int, root: int) -> np.ndarray:
    out = (a % q).astype(np.int64)
    _ntt_core(out, q, pow(root, q - 2, q))
    n_inv = pow(len(a), q - 2, q)
    return (out * n_inv) % q


def convolve_ntt(a: np.ndarray, b: np.ndarray, q: int, root_of: "callable") -> np.ndarray:
    n_out = len(a) + len(b) - 1
    size = 1
    while size < n_out:
        size <<= 1
    root = root_of(q, size)
    fa = np.zeros(size, dtype=np.int64)
    fb = np.zeros(size, dtype=np.int64)
    fa[: len(a)] = a % q
    fb[: len(b)] = b % q
    _ntt_core(fa, q, root)
    _ntt_core(fb, q, root)
    fc = (fa * fb) % q
    _ntt_core(fc, q, pow(root, q - 2, q))
    n_inv = pow(size, q - 2, q)
    return ((fc * n_inv) % q)[:n_out]


@njit(**_OPTS)
def _factorials_mod(n, p, out):
    acc = 1
    out[0] = 1
    for i in range(1, n + 1):
        acc = (acc * i) % p
        out[i] = acc


def factorials_mod(n: int, p: int) -> np.ndarray:
    out = np.empty(n + 1, dtype=np.int64)
    _factorials_mod(n, p, out)
    return out


@njit(**_OPTS)
def _charsum_powers(chi, jmax, qs, out):
    n = len(chi) - 1
    for t in range(len(qs)):
        q = qs[t]
        for j in range(jmax):
            out[j][t] = 0
        for a in range(1, n + 1):
            c = chi[a]
            if c == 0:
                continue
            am = a % q
            x = 1
            for j in range(jmax):
                x = (x * am) % q
                out[j][t] = (out[j][t] + c * x) % q


def charsum_powers(chi: np.ndarray, jmax: int, qs: np.ndarray) -> np.ndarray:
    out = np.zeros((jmax, len(qs)), dtype=np.int64)
    _charsum_powers(chi.astype(np.int64), jmax, qs.astype(np.int64), out)
    return out % qs[None, :]
