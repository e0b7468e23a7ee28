"""q-expansion generators, Hecke operators, precision discipline."""

import math
from fractions import Fraction

import pytest

from maasslift.errors import DomainError, PrecisionError
from maasslift.exactnum import QQ
from maasslift.qexp import QExpansion, delta, eisenstein

TAU = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830, 6: -6048, 7: -16744}


def test_eisenstein_values():
    e4 = eisenstein(4, 8)
    assert e4.a(0) == 1 and e4.a(1) == 240 and e4.a(2) == 2160
    e6 = eisenstein(6, 8)
    assert e6.a(0) == 1 and e6.a(1) == -504
    with pytest.raises(DomainError):
        eisenstein(5, 8)
    with pytest.raises(DomainError):
        eisenstein(2, 8)


def test_delta_dual_construction():
    d = delta(60)
    for n, t in TAU.items():
        assert d.a(n) == t
    assert d.a(0) == 0
    # the (E4^3 - E6^2)/1728 route must agree with the eta product at full
    # precision; delta() asserts this internally, recompute here explicitly
    from maasslift.qexp import _eta_power_24

    eta = _eta_power_24(59)
    assert list(d.coeffs) == [Fraction(0)] + [Fraction(v) for v in eta]


def test_delta_multiplicativity_all_small():
    d = delta(450)
    for m in range(1, 21):
        for n in range(1, 21):
            if math.gcd(m, n) == 1:
                assert d.a(m * n) == d.a(m) * d.a(n)


def test_hecke_on_delta_and_eisenstein():
    d = delta(40)
    assert d.hecke_t(2).a(1) == -24
    assert d.hecke_t(3).a(1) == 252
    # T(2) on the zero expansion
    z = QExpansion(12, [Fraction(0)] * 10)
    assert z.hecke_t(2).is_zero()
    # Eisenstein eigenvalue 1 + ell^(k-1) including the constant term
    e4 = eisenstein(4, 30)
    t3 = e4.hecke_t(3)
    lam = 1 + 3**3
    assert all(t3.a(n) == lam * e4.a(n) for n in range(10))


def test_hecke_commute_as_operators():
    # weight 24 has a two-dimensional cusp space; act on both basis elements
    from maasslift.level1 import miller_basis

    basis = miller_basis(24, 2 * 3 * 5 * 6)
    for f in basis:
        for l1, l2 in ((2, 3), (2, 5), (3, 5)):
            a = f.hecke_t(l1).hecke_t(l2)
            b = f.hecke_t(l2).hecke_t(l1)
            n = min(a.prec, b.prec)
            assert a.truncate(n) == b.truncate(n)


def test_precision_discipline():
    d = delta(10)
    with pytest.raises(PrecisionError):
        d.a(10)
    t = d.hecke_t(3)
    assert t.prec == 3
    with pytest.raises(PrecisionError):
        QExpansion(12, [Fraction(1)]).hecke_t(2)
    with pytest.raises(PrecisionError):
        d.truncate(11)
    # product precision is the min of the inputs
    p = delta(10) * eisenstein(4, 7)
    assert p.prec == 7 and p.weight == 16


def test_weight_and_ring_mismatch():
    with pytest.raises(DomainError):
        delta(5) + eisenstein(4, 5)


def test_ntt_product_matches_schoolbook():
    e4 = eisenstein(4, 200)
    d = delta(200)
    fast = e4 * d
    slow = [
        sum(e4.a(i) * d.a(n - i) for i in range(n + 1)) for n in range(60)
    ]
    assert list(fast.coeffs[:60]) == slow
