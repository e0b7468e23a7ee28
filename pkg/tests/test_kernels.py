"""Kernel backends against naive references, on both code paths."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maasslift import _kernels as K
from maasslift._kernels import ntt_numpy

BACKENDS = [ntt_numpy]
if K.NUMBA_AVAILABLE:
    from maasslift._kernels import ntt_numba

    BACKENDS.append(ntt_numba)


def _naive_conv(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return out


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_ntt_roundtrip_and_convolution(impl):
    rng = np.random.default_rng(42)
    q = K.FIXED_PRIMES[0]
    for n in (2, 8, 64, 256):
        a = rng.integers(0, q, n)
        root = K.root_of_unity(q, n)
        back = impl.intt(impl.ntt(a, q, root), q, root)
        assert np.array_equal(back, a % q)
    a = rng.integers(0, 1000, 37)
    b = rng.integers(0, 1000, 23)
    got = impl.convolve_ntt(a, b, q, K.root_of_unity)
    assert got.tolist() == _naive_conv(a.tolist(), b.tolist(), q)


def test_backends_agree():
    if not K.NUMBA_AVAILABLE:
        pytest.skip("numba not available")
    rng = np.random.default_rng(3)
    q = K.FIXED_PRIMES[1]
    a = rng.integers(0, q, 128)
    root = K.root_of_unity(q, 128)
    assert np.array_equal(ntt_numpy.ntt(a, q, root), ntt_numba.ntt(a, q, root))


def test_convolve_mod_small_prime():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 97, 200)
    b = rng.integers(0, 97, 100)
    assert np.array_equal(K.convolve_mod(a, b, 97), np.convolve(a, b) % 97)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-(10**12), 10**12), min_size=1, max_size=40),
    st.lists(st.integers(-(10**12), 10**12), min_size=1, max_size=40),
)
def test_convolve_int_exact(a, b):
    got = K.convolve_int(a, b)
    ref = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            ref[i + j] += x * y
    assert got == ref


def test_convolve_int_big_coefficients():
    a = [(-3) ** i * 7**40 + i for i in range(180)]
    b = [5**50 - i**3 for i in range(120)]
    ref = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            ref[i + j] += x * y
    assert K.convolve_int(a, b) == ref


def test_series_inverse():
    rng = np.random.default_rng(5)
    p = 516223
    f = rng.integers(0, p, 3000)
    f[0] = 7
    g = K.series_inverse_mod(f, 3000, p)
    fg = K.convolve_mod(f, g, p)[:3000]
    assert fg[0] == 1 and not fg[1:].any()


def test_factorials_mod():
    import math

    got = K.factorials_mod(50, 101)
    for i in (0, 1, 10, 50):
        assert got[i] == math.factorial(i) % 101


def test_charsum_powers_vs_direct():
    chi = K.quad_char_table(-7, 40)
    qs = np.array(K.ntt_primes(2), dtype=np.int64)
    got = K.charsum_powers(chi, 4, qs)
    for j in range(1, 5):
        direct = sum(int(chi[a]) * a**j for a in range(41))
        for t, q in enumerate(qs):
            assert got[j - 1][t] == direct % int(q)


def _kronecker_ref(a, n):
    from maasslift.exactnum import kronecker

    return kronecker(a, n)


@pytest.mark.parametrize("d0", [-3, -4, 5, 8, -8, -7, 12, 13, -20, -24, 21])
def test_quad_char_table_matches_kronecker(d0):
    table = K.quad_char_table(d0, 200)
    for a in range(201):
        assert int(table[a]) == _kronecker_ref(d0, a), (d0, a)


def test_quad_char_table_rejects_non_fundamental():
    for bad in (9, -12, 75, 18):
        with pytest.raises(ValueError):
            K.quad_char_table(bad, 10)
