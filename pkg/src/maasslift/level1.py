"""Cusp form spaces S_w(SL2(Z)): Miller basis, Hecke matrices, newform data.

The Victor Miller basis is the echelonized integral basis with
a(b_i)(j) = delta_ij for 1 <= i, j <= dim; Hecke matrices are taken in that
basis and cached on disk; the newform is presented over its Hecke eigenfield
Q[x]/(charpoly T(2)) with a(2) mapped to the field generator.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import records
from .errors import DomainError, PrecisionError
from .exactnum import (
    NumberField,
    Poly,
    QQ,
    charpoly,
    factor_rational_poly,
    is_irreducible_rational,
    kernel_basis,
)
from .qexp import QExpansion, delta, eisenstein


class MultipleClassError(DomainError):
    """T(2) charpoly is reducible; carries the irreducible factors."""

    def __init__(self, factors):
        self.factors = factors
        names = ", ".join(repr(f) for f, _ in factors)
        super().__init__(f"multiple Galois conjugacy classes; charpoly factors: {names}")


def dim_modforms(w: int) -> int:
    if w < 0 or w % 2:
        return 0
    if w % 12 == 2:
        return w // 12
    return w // 12 + 1


def dim_cusp(w: int) -> int:
    """dim S_w(SL2(Z)); odd weight gives 0 by convention."""
    if w % 2 or w < 12:
        return 0
    return dim_modforms(w) - 1


@dataclass(frozen=True)
class MillerBasis:
    weight: int
    prec: int
    rows: tuple  # QExpansion, a(rows[i])(j) = delta_{i+1,j}

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


def _monomial(w: int, c: int, prec: int) -> QExpansion:
    """Delta^c E4^a E6^b of weight w with b in {0, 1}."""
    rest = w - 12 * c
    if rest % 4 == 0:
        a, b = rest // 4, 0
    else:
        a, b = (rest - 6) // 4, 1
    if a < 0:
        raise DomainError(f"no monomial of weight {w} with Delta-order {c}")
    out = delta(prec) ** c
    if a:
        out = out * (eisenstein(4, prec) ** a)
    if b:
        out = out * eisenstein(6, prec)
    return out


def miller_basis(w: int, prec: int) -> MillerBasis:
    d = dim_cusp(w)
    if d == 0:
        return MillerBasis(w, prec, ())
    if prec <= d:
        raise PrecisionError(f"precision {prec} too small for dim {d}")
    rows = [list(_monomial(w, c, prec).coeffs) for c in range(1, d + 1)]
    # echelonize on coefficient columns 1..d
    for i in range(d):
        piv = next(r for r in range(i, d) if rows[r][i + 1] != 0)
        rows[i], rows[piv] = rows[piv], rows[i]
        inv = Fraction(1) / rows[i][i + 1]
        rows[i] = [x * inv for x in rows[i]]
        for r in range(d):
            if r != i and rows[r][i + 1] != 0:
                f = rows[r][i + 1]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[i])]
    exps = []
    for row in rows:
        if any(c.denominator != 1 for c in row):
            raise RuntimeError("Miller basis failed to be integral")
        exps.append(QExpansion(w, row, QQ))
    return MillerBasis(w, prec, tuple(exps))


def hecke_matrix(w: int, ell: int, prec: int = None) -> list:
    """Integral matrix of T(ell) in the Miller basis (rows = images)."""
    d = dim_cusp(w)
    if d == 0:
        return []
    if prec is None:
        prec = ell * (d + 1)
    if prec < ell * (d + 1):
        raise PrecisionError(f"precision {prec} below T({ell}) requirement {ell*(d+1)}")
    construction = {"op": "hecke-matrix", "weight": w, "ell": ell, "prec": prec}
    cached = records.cache_get(construction)
    if cached is not None:
        return [[Fraction(int(x)) for x in row] for row in cached.payload["rows"]]
    basis = miller_basis(w, prec)
    mat = []
    for b in basis:
        tb = b.hecke_t(ell)
        row = [tb.a(j) for j in range(1, d + 1)]
        if any(c.denominator != 1 for c in row):
            raise RuntimeError("Hecke matrix failed to be integral")
        mat.append(row)
    rec = records.FormRecord(
        kind="matrix",
        weight=w,
        precision=prec,
        payload={
            "rows": [[records.encode_number(x) for x in row] for row in mat],
            "charpoly": [records.encode_number(c) for c in charpoly(mat).coeffs],
        },
        construction=construction,
    )
    records.cache_put(construction, rec)
    return mat


def hecke_charpoly(w: int, ell: int) -> Poly:
    return charpoly(hecke_matrix(w, ell))


class NewformData:
    """The Galois conjugacy class of newforms in S_w, presented over Q(alpha).

    alpha = a(2) generates the eigenfield (charpoly of T(2)); prime
    eigenvalues come from the T(ell) action on the fixed T(2)-eigenvector, so
    all embeddings are consistent by construction.
    """

    def __init__(self, w: int, prec: int = 30):
        d = dim_cusp(w)
        if d == 0:
            raise DomainError(f"S_{w} is zero")
        g = hecke_charpoly(w, 2)
        if not is_irreducible_rational(g):
            raise MultipleClassError(factor_rational_poly(g))
        self.weight = w
        self.charpoly_t2 = g
        self.field = NumberField(g, check_irreducible=False)
        self.prec = max(prec, d + 2)
        alpha = self.field.gen()
        t2 = hecke_matrix(w, 2)
        K = self.field
        # left eigenvector: rows of the matrix act on basis expansions
        a_mat = [
            [K.coerce(t2[j][i]) - (alpha if i == j else K.zero) for j in range(d)]
            for i in range(d)
        ]
        kern = kernel_basis(a_mat, K)
        if len(kern) != 1:
            raise RuntimeError("T(2) eigenline is not one-dimensional over the eigenfield")
        v = kern[0]
        if not v[0]:
            raise RuntimeError("eigenvector has vanishing leading Miller coordinate")
        inv = v[0].inverse()
        self._eigvec = [x * inv for x in v]
        basis = miller_basis(w, self.prec)
        coeffs = []
        for n in range(self.prec):
            acc = K.zero
            for i, b in enumerate(basis):
                c = b.a(n)
                if c:
                    acc = acc + self._eigvec[i] * c
            coeffs.append(acc)
        self.expansion = QExpansion(w, coeffs, K)
        self._eigen_cache = {}

    def a(self, n: int):
        """n-th Fourier coefficient (= eigenvalue for prime n)."""
        if n < self.prec:
            return self.expansion.a(n)
        raise PrecisionError(f"coefficient {n} beyond stored precision {self.prec}")

    def eigenvalue(self, ell: int):
        """a(ell) for prime ell via the T(ell) action on the T(2)-eigenvector."""
        cached = self._eigen_cache.get(ell)
        if cached is not None:
            return cached
        d = dim_cusp(self.weight)
        m = hecke_matrix(self.weight, ell)
        K = self.field
        v = self._eigvec
        image = [
            sum((K.coerce(m[j][i]) * v[j] for j in range(d)), K.zero) for i in range(d)
        ]
        lam = None
        for i in range(d):
            if v[i]:
                cand = image[i] / v[i]
                if lam is None:
                    lam = cand
                elif lam != cand:
                    raise RuntimeError("inconsistent eigenvalue ratios")
            elif image[i]:
                raise RuntimeError("eigenvector annihilated but image is not")
        if ell < self.prec and self.expansion.a(ell) != lam:
            raise RuntimeError("eigenvalue disagrees with the eigen-expansion")
        self._eigen_cache[ell] = lam
        return lam


def newform(w: int, prec: int = 30) -> NewformData:
    return NewformData(w, prec)
