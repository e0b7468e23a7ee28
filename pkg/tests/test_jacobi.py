"""Jacobi cusp forms: Cohen numbers, generators, bases, Kohnen bridge."""

from fractions import Fraction

import pytest

from maasslift.errors import DomainError, PrecisionError
from maasslift.jacobi import (
    JacobiForm1,
    KohnenForm,
    cohen_table,
    dim_jacobi_cusp,
    ez_to_kohnen,
    jacobi_cusp_basis,
    jacobi_eisenstein,
    jacobi_generators,
    plus_space_check,
)
from maasslift.level1 import dim_cusp
from maasslift.lfun import DirichletChar, gen_bernoulli, rational_bernoulli
from maasslift.qexp import delta, eisenstein


def test_cohen_numbers_small_hurwitz():
    t = cohen_table(1, 12)
    # Hurwitz class numbers H(N)
    expect = {0: Fraction(-1, 12), 3: Fraction(1, 3), 4: Fraction(1, 2), 7: 1,
              8: 1, 11: 1, 12: Fraction(4, 3)}
    for n, v in expect.items():
        assert t[n] == v, n
    assert t[1] == 0 and t[2] == 0 and t[5] == 0


def test_cohen_numbers_vs_direct_formula():
    from maasslift.exactnum import fundamental_decomposition, kronecker

    for r in (3, 5):
        t = cohen_table(r, 60)
        assert t[0] == -rational_bernoulli(2 * r) / (2 * r)
        for n in range(1, 61):
            if (-n) % 4 in (2, 3):
                assert t[n] == 0
                continue
            d0, f = fundamental_decomposition(-n)
            lval = -gen_bernoulli(r, DirichletChar.quadratic(d0)) / r
            acc = Fraction(0)
            for d in range(1, f + 1):
                if f % d:
                    continue
                mu = _moebius(d)
                if mu:
                    sig = sum(e ** (2 * r - 1) for e in range(1, f // d + 1) if (f // d) % e == 0)
                    acc += mu * kronecker(d0, d) * d ** (r - 1) * sig
            assert t[n] == lval * acc, (r, n)


def _moebius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    return -out if n > 1 else out


def test_eisenstein_jacobi_specializes_to_elliptic_eisenstein():
    for k in (4, 6):
        ej = jacobi_eisenstein(k, 84)
        sp = ej.specialize_z0(20)
        assert list(sp.coeffs) == list(eisenstein(k, 20).coeffs)


def test_generators_frozen_values(phi10, phi12):
    assert [phi10.coeffs[n] for n in (3, 4, 7, 8, 11, 12)] == [1, -2, -16, 36, 99, -272]
    assert [phi12.coeffs[n] for n in (3, 4, 7, 8)] == [1, 10, -88, -132]
    for phi in (phi10, phi12):
        assert phi.coeffs[0] == 0
        assert all(c.denominator == 1 for c in phi.coeffs)


def test_generator_specialization_oracles(phi10, phi12):
    # phi10(tau, 0) = 0 since S_10 = 0
    assert phi10.specialize_z0(24).is_zero()
    # phi12(tau, 0) lands in S_12 = C Delta
    sp = phi12.specialize_z0(24)
    d = delta(24)
    ratio = sp.a(1)
    assert ratio != 0 and all(sp.a(n) == ratio * d.a(n) for n in range(24))
    # second development coefficient of phi10 is a multiple of Delta
    second = []
    for n in range(24):
        acc = Fraction(0)
        r = 1
        while r * r <= 4 * n:
            acc += 2 * r * r * phi10.c(r * r - 4 * n)
            r += 1
        second.append(acc)
    ratio = second[1]
    assert ratio != 0 and all(second[n] == ratio * d.a(n) for n in range(24))


def test_dimensions_match_cusp_spaces():
    for k in range(10, 30, 2):
        assert dim_jacobi_cusp(k) == dim_cusp(2 * k - 2)
    assert dim_jacobi_cusp(11) == 0
    assert dim_jacobi_cusp(28) == 4


def test_cusp_basis(phi10):
    basis = jacobi_cusp_basis(28, 400)
    assert len(basis) == 4
    assert jacobi_cusp_basis(11, 100) == []
    assert jacobi_cusp_basis(10, 400)[0].coeffs[:40] == phi10.coeffs[:40]


def test_ez_to_kohnen_and_plus_space(phi10):
    g = ez_to_kohnen(phi10)
    assert g.a(3) == 1 and g.weight == Fraction(19, 2)
    assert plus_space_check(g) == []
    # zero form passes, synthetic violation at n = 2 is flagged
    zero = KohnenForm(19, (Fraction(0),) * 9)
    assert plus_space_check(zero) == []
    bad = KohnenForm(19, (Fraction(0), Fraction(0), Fraction(1), Fraction(0)))
    assert plus_space_check(bad) == [2]
    # linearity
    h = ez_to_kohnen(phi10.scale(3))
    assert (g + g.scale(2)).coeffs == h.coeffs


def test_ez_injective_on_basis():
    from maasslift.exactnum import rref

    basis = jacobi_cusp_basis(28, 600)
    mat = [[Fraction(c) for c in ez_to_kohnen(phi).coeffs] for phi in basis]
    _, pivots = rref(mat)
    assert len(pivots) == len(basis)


def test_support_validation_and_precision(phi10):
    with pytest.raises(DomainError):
        JacobiForm1(9, (Fraction(0),) * 4)
    with pytest.raises(DomainError):
        JacobiForm1(10, (Fraction(0), Fraction(1)))
    with pytest.raises(PrecisionError):
        phi10.c(-(phi10.d_max + 5))
    assert phi10.c(-5) == 0  # wrong congruence class inside range
    assert phi10.c_two_var(1, 1) == phi10.c(-3)
