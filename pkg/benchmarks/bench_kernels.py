"""Benchmark the hot kernels on both backends (numba jit vs pure numpy).

Run:  python benchmarks/bench_kernels.py
The numba path is what MAASSLIFT_FORCE_NUMPY=1 switches off; this script
imports both backend modules directly so a single process can compare them.
"""

import time

import numpy as np

from maasslift import _kernels as K
from maasslift._kernels import ntt_numpy

try:
    from maasslift._kernels import ntt_numba

    HAVE_NUMBA = True
except ImportError:
    ntt_numba = None
    HAVE_NUMBA = False


def timeit(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_ntt(sizes=(1 << 14, 1 << 17, 1 << 20)):
    q = K.FIXED_PRIMES[0]
    rng = np.random.default_rng(0)
    print(f"\nforward NTT mod {q}")
    print(f"{'size':>10} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for n in sizes:
        a = rng.integers(0, q, n)
        root = K.root_of_unity(q, n)
        t_np, ref = timeit(ntt_numpy.ntt, a, q, root)
        if HAVE_NUMBA:
            ntt_numba.ntt(a[:16], q, K.root_of_unity(q, 16))  # warm the jit
            t_nb, got = timeit(ntt_numba.ntt, a, q, root)
            assert np.array_equal(ref, got)
            print(f"{n:>10} {t_np:>11.4f}s {t_nb:>11.4f}s {t_np / t_nb:>8.2f}x")
        else:
            print(f"{n:>10} {t_np:>11.4f}s {'-':>12} {'-':>9}")


def bench_series_inverse(p=516223, length=1 << 17):
    rng = np.random.default_rng(1)
    f = rng.integers(0, p, length)
    f[0] = 3
    print(f"\npower series inverse mod {p}, length {length}")
    import maasslift._kernels as kern

    results = {}
    for name, impl in (("numpy", ntt_numpy), ("numba", ntt_numba)):
        if impl is None:
            continue
        saved = kern._impl
        kern._impl = impl
        try:
            t, g = timeit(kern.series_inverse_mod, f, length, p, repeat=1)
        finally:
            kern._impl = saved
        results[name] = (t, g)
        print(f"  {name:>6}: {t:.2f}s")
    if len(results) == 2:
        assert np.array_equal(results["numpy"][1], results["numba"][1])
        print(f"  speedup: {results['numpy'][0] / results['numba'][0]:.2f}x")


def bench_charsum(n=12000, jmax=5):
    chi = K.quad_char_table(-7, n)
    qs = np.array(K.ntt_primes(3), dtype=np.int64)
    print(f"\ncharacter power sums to {n}, j <= {jmax}, 3 primes")
    t_np, ref = timeit(ntt_numpy.charsum_powers, chi, jmax, qs)
    print(f"  numpy: {t_np * 1000:.2f}ms")
    if HAVE_NUMBA:
        t_nb, got = timeit(ntt_numba.charsum_powers, chi, jmax, qs)
        assert np.array_equal(ref, got)
        print(f"  numba: {t_nb * 1000:.2f}ms   speedup {t_np / t_nb:.2f}x")


def bench_bernoulli_scan(p=9973):
    from maasslift.lfun import bernoulli

    print(f"\nfull Bernoulli scan mod {p} (table of all B_n, n <= p-3)")
    import maasslift._kernels as kern

    for name, impl in (("numpy", ntt_numpy), ("numba", ntt_numba)):
        if impl is None:
            continue
        saved = kern._impl
        kern._impl = impl
        bernoulli._BMODP_CACHE.clear()
        try:
            t0 = time.perf_counter()
            idx = bernoulli.irregular_scan(p)
            t = time.perf_counter() - t0
        finally:
            kern._impl = saved
        print(f"  {name:>6}: {t:.2f}s (irregular indices: {idx})")


if __name__ == "__main__":
    print(f"numba available: {HAVE_NUMBA} (active backend: {K.BACKEND})")
    bench_ntt()
    bench_series_inverse()
    bench_charsum()
    bench_bernoulli_scan()
