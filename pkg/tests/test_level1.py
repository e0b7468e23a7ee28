"""Cusp form spaces: Miller basis, Hecke matrices, newform data."""

from fractions import Fraction

import pytest

from maasslift.errors import DomainError, PrecisionError
from maasslift.exactnum import Poly, mat_mul, nf_reduce_deg1, roots_mod_p
from maasslift.level1 import (
    MultipleClassError,
    NewformData,
    dim_cusp,
    hecke_charpoly,
    hecke_matrix,
    miller_basis,
    newform,
)

X = Poly.x()


def test_dim_cusp():
    assert dim_cusp(12) == 1
    assert dim_cusp(2) == 0
    assert dim_cusp(0) == 0
    assert dim_cusp(54) == 4
    assert dim_cusp(11) == 0  # odd weight convention
    assert [dim_cusp(w) for w in range(12, 40, 2)] == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2]


def test_miller_basis_echelon_and_dims():
    for w in range(0, 12, 2):
        assert len(miller_basis(w, 8)) == 0 == dim_cusp(w)
    for w in range(12, 62, 2):
        d = dim_cusp(w)
        basis = miller_basis(w, d + 8)
        assert len(basis) == d
        for i, b in enumerate(basis):
            for j in range(1, d + 1):
                assert b.a(j) == (1 if j == i + 1 else 0)
            assert all(c.denominator == 1 for c in b.coeffs)
    mb = miller_basis(54, 24)
    assert len(mb) == 4 and mb.rows[0].a(1) == 1 and mb.rows[0].a(2) == 0
    with pytest.raises(PrecisionError):
        miller_basis(54, 4)


def test_hecke_matrix_examples():
    assert hecke_matrix(12, 2) == [[Fraction(-24)]]
    assert hecke_matrix(12, 3) == [[Fraction(252)]]
    with pytest.raises(PrecisionError):
        hecke_matrix(54, 2, prec=5)


def test_hecke_matrices_commute():
    for w in (12, 24, 36, 48, 54):
        m2, m3 = hecke_matrix(w, 2), hecke_matrix(w, 3)
        if m2:
            assert mat_mul(m2, m3) == mat_mul(m3, m2)


def test_weight_54_charpoly_roots():
    g = hecke_charpoly(54, 2)
    assert g.coeffs[1] == -1083312724663489297121280
    assert roots_mod_p(g, 516223) == {287487, 85284}


def test_newform_data():
    f12 = newform(12)
    assert f12.a(1) == 1 and f12.a(2) == -24
    for w in (12, 16, 18, 20, 22, 26, 54):
        f = newform(w)
        a = f.a(2)
        assert f.a(1) == 1
        assert f.a(4) == a * a - 2 ** (w - 1)  # Hecke recursion at ell = 2
        assert f.a(6) == f.a(2) * f.a(3)  # multiplicativity
        assert f.eigenvalue(3) == f.a(3)
    with pytest.raises(DomainError):
        newform(10)


def test_weight54_reductions_at_degree_one_primes():
    f = newform(54)
    p = 516223
    reductions = {
        nf_reduce_deg1(f.a(2), p, r).residue for r in roots_mod_p(f.charpoly_t2, p)
    }
    assert reductions == {287487, 85284}


def test_multiple_class_error_names_factors(monkeypatch):
    import maasslift.level1 as level1

    reducible = (X + 24) * (X - 216)
    monkeypatch.setattr(level1, "hecke_charpoly", lambda w, ell: reducible)
    with pytest.raises(MultipleClassError) as err:
        NewformData(12)
    assert len(err.value.factors) == 2
    degs = sorted(g.degree for g, _ in err.value.factors)
    assert degs == [1, 1]


def test_hecke_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("MAASSLIFT_CACHE_DIR", str(tmp_path))
    cold = hecke_matrix(16, 2)
    warm = hecke_matrix(16, 2)
    assert cold == warm == [[Fraction(216)]]
    assert any(tmp_path.iterdir())
