"""Genus-2 Siegel expansions: Maass relation checks, Phi operator, Hecke T(ell).

Coefficients A(n, r, m) are class functions of the half-integral index matrix
[[n, r/2], [r/2, m]] under GL2(Z) (level 1, even weight), so storage holds one
value per Gauss-reduced representative (0 <= r <= n <= m).

T(ell) is assembled from an explicitly enumerated right-coset decomposition of
the similitude-ell double coset: block-triangular representatives
[[A, B], [0, D]] with A^t D = ell, B^t D symmetric, B taken modulo B -> B + SD.
The A-classes are Hermite forms, the B-classes an exact lattice quotient via
Smith normal form, the coset count is asserted to be (ell+1)(ell^2+1), and the
resulting operator is certified by the Saito-Kurokawa eigenvalue identity in
the test suite rather than transcribed from the literature.
"""

import math
from fractions import Fraction

from .errors import DomainError, PrecisionError
from .exactnum import is_probable_prime, smith_normal_form as _smith_normal_form
from .qexp import QExpansion


def reduce_form(n: int, r: int, m: int):
    """Canonical GL2(Z)-representative (0 <= r <= n <= m) of a PSD triple."""
    if n < 0 or m < 0 or 4 * n * m < r * r:
        raise DomainError(f"({n},{r},{m}) is not positive semidefinite")
    while True:
        if n > m:
            n, m = m, n
        if n == 0:
            return (0, 0, m)
        if abs(r) > n:
            # x -> x - t y with t = nearest integer to r/(2n)
            t = (2 * r + 2 * n) // (4 * n) if r >= 0 else -((2 * (-r) + 2 * n) // (4 * n))
            r2 = r - 2 * t * n
            m2 = n * t * t - r * t + m
            r, m = r2, m2
            continue
        if n <= m:
            break
    return (n, abs(r), m)


class SiegelExpansion:
    """Fourier data of a genus-2 form: reduced triples -> coefficients."""

    __slots__ = ("weight", "bound", "coeffs")

    def __init__(self, weight: int, bound: int, coeffs: dict):
        self.weight = weight
        self.bound = bound
        self.coeffs = dict(coeffs)

    def a(self, n: int, r: int, m: int):
        key = reduce_form(n, r, m)
        try:
            return self.coeffs[key]
        except KeyError:
            raise PrecisionError(
                f"coefficient at {(n, r, m)} (reduced {key}) not stored; bound {self.bound}"
            ) from None

    def has(self, n: int, r: int, m: int) -> bool:
        return reduce_form(n, r, m) in self.coeffs

    def stored_triples(self):
        return sorted(self.coeffs)

    def perturb(self, n: int, r: int, m: int, delta) -> "SiegelExpansion":
        """Copy with A(n, r, m) shifted by delta (mutation-test helper)."""
        key = reduce_form(n, r, m)
        out = dict(self.coeffs)
        out[key] = out.get(key, 0) + delta
        return SiegelExpansion(self.weight, self.bound, out)

    def __eq__(self, other):
        if not isinstance(other, SiegelExpansion):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )


def maass_check(fexp: SiegelExpansion) -> list:
    """Triples violating A(n,r,m) = sum_{d | (n,r,m)} d^(k-1) A(nm/d^2, r/d, 1).

    Runs over every stored reduced triple with n, m >= 1; the right side reads
    the (., ., 1) rows through the same expansion.
    """
    k = fexp.weight
    bad = []
    for (n, r, m) in fexp.stored_triples():
        if n < 1 or m < 1:
            continue
        g = math.gcd(math.gcd(n, r), m)
        acc = None
        for d in range(1, g + 1):
            if g % d:
                continue
            term = fexp.a(n * m // (d * d), r // d, 1) * Fraction(d) ** (k - 1)
            acc = term if acc is None else acc + term
        if acc != fexp.a(n, r, m):
            bad.append((n, r, m))
    return bad


def phi_operator(fexp: SiegelExpansion, prec: int = None) -> QExpansion:
    """Siegel Phi: the weight-k elliptic form with coefficients A(n, 0, 0)."""
    if prec is None:
        prec = fexp.bound + 1
        while fexp.has(prec, 0, 0):
            prec += 1
    out = []
    for n in range(prec):
        out.append(fexp.a(n, 0, 0) if n else fexp.coeffs.get((0, 0, 0), Fraction(0)))
    return QExpansion(fexp.weight, out)


# ------------------------------------------------------- coset representatives


def _mat2_mul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _coset_classes(ell: int):
    """[(A, D, [B...])] for the similitude-ell Hecke double coset.

    A runs over Hermite forms of determinant 1, ell, ell^2 whose transposed
    adjugate stays integral after the ell * A^{-t} scaling (that is all of
    them here): the identity, the ell+1 forms of determinant ell, and ell*I.
    """
    a_classes = [((1, 0), (0, 1))]
    for j in range(ell):
        a_classes.append(((1, j), (0, ell)))
    a_classes.append(((ell, 0), (0, 1)))
    a_classes.append(((ell, 0), (0, ell)))
    out = []
    for amat in a_classes:
        det_a = amat[0][0] * amat[1][1] - amat[0][1] * amat[1][0]
        # D = ell * A^(-t) = (ell/det A) * adj(A)^t
        adj_t = ((amat[1][1], -amat[1][0]), (-amat[0][1], amat[0][0]))
        scale = Fraction(ell, det_a)
        entries = [scale * x for row in adj_t for x in row]
        if any(e.denominator != 1 for e in entries):
            continue
        dmat = ((int(entries[0]), int(entries[1])), (int(entries[2]), int(entries[3])))
        out.append((amat, dmat, _b_representatives(dmat)))
    total = sum(len(b) for _, _, b in out)
    if total != (ell + 1) * (ell * ell + 1):
        raise RuntimeError(f"coset count {total} != (ell+1)(ell^2+1) for ell={ell}")
    _assert_cosets_distinct(out, ell)
    return out


def _b_representatives(dmat):
    """Reps of {B : D^t B symmetric} / {S D : S symmetric} as 2x2 tuples."""
    d11, d12 = dmat[0]
    d21, d22 = dmat[1]
    # symmetry condition on D^t B in coordinates (b11, b12, b21, b22):
    # (D^t B)_{12} - (D^t B)_{21} = -d12 b11 + d11 b12 - d22 b21 + d21 b22 = 0
    basis = _integer_kernel_rank3((-d12, d11, -d22, d21))
    sgens = []
    for s in (((1, 0), (0, 0)), ((0, 1), (1, 0)), ((0, 0), (0, 1))):
        sd = _mat2_mul(s, dmat)
        sgens.append((sd[0][0], sd[0][1], sd[1][0], sd[1][1]))
    coords = [_solve_in_basis(basis, g) for g in sgens]
    reps = _quotient_reps(basis, coords)
    return [((b[0], b[1]), (b[2], b[3])) for b in reps]


def _integer_kernel_rank3(row):
    """Basis of the rank-3 saturated integer kernel of a nonzero 1x4 row."""
    _u, d, v = _smith_normal_form([list(row)])
    if d[0][0] == 0:
        raise RuntimeError("degenerate symmetry condition")
    # row * V = (+-d, 0, 0, 0), and V is unimodular: kernel = columns 1..3 of V
    return [tuple(v[i][j] for i in range(4)) for j in range(1, 4)]


def _solve_in_basis(basis, vec):
    """Integer coordinates of vec in an independent basis of a saturated lattice."""
    n = len(basis)
    mat = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(vec[i])] for i in range(4)]
    pivots = []
    r = 0
    for col in range(n):
        sel = next((i for i in range(r, 4) if mat[i][col] != 0), None)
        if sel is None:
            raise RuntimeError("basis not independent")
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(4):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, 4):
        if mat[i][n] != 0:
            raise RuntimeError("vector outside lattice span")
    coords = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        c = mat[i][n]
        if c.denominator != 1:
            raise RuntimeError("non-integral coordinates in lattice solve")
        coords[col] = c
    return [int(c) for c in coords]


def _quotient_reps(basis, coords):
    """Coset representatives of span(basis) / span(coords-combinations).

    With U C V = D in Smith form, rowspan(C) = rowspan(D V^{-1}) and
    Z^3 / rowspan(D V^{-1}) is enumerated by y V^{-1} for 0 <= y_i < d_i.
    """
    import itertools

    _u, d, v = _smith_normal_form(coords)
    dis = [d[i][i] for i in range(3)]
    if any(x <= 0 for x in dis):
        raise RuntimeError("B-sublattice is not finite index")
    vinv = _mat3_inverse_unimodular(v)
    reps = []
    for y in itertools.product(*[range(x) for x in dis]):
        coeff = [sum(y[i] * vinv[i][j] for i in range(3)) for j in range(3)]
        reps.append(tuple(sum(coeff[i] * basis[i][t] for i in range(3)) for t in range(4)))
    return reps


def _mat3_inverse_unimodular(m):
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if det not in (1, -1):
        raise RuntimeError("matrix not unimodular")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [
                [m[a][b] for b in range(3) if b != j] for a in range(3) if a != i
            ]
            c = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
            cof[j][i] = ((-1) ** (i + j)) * c * det
    return cof


def _assert_cosets_distinct(classes, ell):
    """Pairwise distinctness of the enumerated cosets (runs once per ell)."""
    mats = []
    for amat, dmat, breps in classes:
        for b in breps:
            mats.append((amat, b, dmat))
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if _same_coset(mats[i], mats[j], ell):
                raise RuntimeError(f"duplicate cosets for ell={ell}")


def _same_coset(m1, m2, ell):
    a1, b1, d1 = m1
    a2, b2, d2 = m2
    # Gamma m1 == Gamma m2 iff m2 m1^{-1} integral symplectic; with block
    # upper-triangular shape: A2 A1^{-1} in GL2(Z), X = (B2 - A2 A1^{-1} B1) D1^{-1}
    # integral with X (A2A1^{-1})^{-t}... check via exact rational arithmetic.
    det1 = a1[0][0] * a1[1][1] - a1[0][1] * a1[1][0]
    inv_a1 = (
        (Fraction(a1[1][1], det1), Fraction(-a1[0][1], det1)),
        (Fraction(-a1[1][0], det1), Fraction(a1[0][0], det1)),
    )
    t = _mat2_mul(a2, inv_a1)
    for row in t:
        for x in row:
            if Fraction(x).denominator != 1:
                return False
    dt = t[0][0] * t[1][1] - t[0][1] * t[1][0]
    if abs(dt) != 1:
        return False
    # candidate gamma = [[T, X],[0, T^{-t}]]; require D2 = T^{-t} D1 and
    # B2 = T B1 + X D1 with X integral and X T^t symmetric => gamma symplectic
    det_t = dt
    t_inv_t = (
        (Fraction(t[1][1], det_t), Fraction(-t[1][0], det_t)),
        (Fraction(-t[0][1], det_t), Fraction(t[0][0], det_t)),
    )
    d_check = _mat2_mul(t_inv_t, d1)
    if any(d_check[i][j] != d2[i][j] for i in range(2) for j in range(2)):
        return False
    tb1 = _mat2_mul(t, b1)
    diff = ((b2[0][0] - tb1[0][0], b2[0][1] - tb1[0][1]), (b2[1][0] - tb1[1][0], b2[1][1] - tb1[1][1]))
    det_d1 = d1[0][0] * d1[1][1] - d1[0][1] * d1[1][0]
    inv_d1 = (
        (Fraction(d1[1][1], det_d1), Fraction(-d1[0][1], det_d1)),
        (Fraction(-d1[1][0], det_d1), Fraction(d1[0][0], det_d1)),
    )
    x = _mat2_mul(diff, inv_d1)
    for row in x:
        for val in row:
            if Fraction(val).denominator != 1:
                return False
    # symmetry of X T^t
    xt = _mat2_mul(x, ((t[0][0], t[1][0]), (t[0][1], t[1][1])))
    return xt[0][1] == xt[1][0]


_COSET_CACHE: dict = {}


def coset_data(ell: int):
    if not is_probable_prime(ell):
        raise DomainError(f"T(ell) implemented for prime ell only, got {ell}")
    data = _COSET_CACHE.get(ell)
    if data is None:
        data = _coset_classes(ell)
        _COSET_CACHE[ell] = data
    return data


# ------------------------------------------------------------------- T(ell)


def hecke_t2(fexp: SiegelExpansion, ell: int, out_bound: int = None) -> SiegelExpansion:
    """T(ell) on a genus-2 expansion, coefficients from the coset sum.

    Output coefficient at T is a(ell T) + ell^(k-2)-weighted intermediate terms
    (with exact character sums over the B-classes) + ell^(2k-3) a(T/ell).
    """
    if out_bound is None:
        out_bound = fexp.bound // (ell * ell)
    if fexp.bound < ell * ell * out_bound:
        raise PrecisionError(
            f"input bound {fexp.bound} below {ell*ell*out_bound} for T({ell})"
        )
    k = fexp.weight
    classes = coset_data(ell)
    norm = Fraction(ell) ** (2 * k - 3)
    out = {}
    for m in range(out_bound + 1):
        for n in range(m + 1):
            for r in range(n + 1):
                if r * r > 4 * n * m:
                    continue
                if reduce_form(n, r, m) != (n, r, m):
                    continue
                out[(n, r, m)] = _hecke_coefficient(fexp, k, ell, n, r, m, classes, norm)
    return SiegelExpansion(k, out_bound, out)


def _hecke_coefficient(fexp, k, ell, n, r, m, classes, norm):
    total = None
    for amat, dmat, breps in classes:
        det_d = dmat[0][0] * dmat[1][1] - dmat[0][1] * dmat[1][0]
        # doubled index matrix S' = [[2n, r], [r, 2m]]; U = D S' D^t
        s11, s12, s22 = 2 * n, r, 2 * m
        d11, d12 = dmat[0]
        d21, d22 = dmat[1]
        u11 = d11 * (d11 * s11 + d12 * s12) + d12 * (d11 * s12 + d12 * s22)
        u12 = d21 * (d11 * s11 + d12 * s12) + d22 * (d11 * s12 + d12 * s22)
        u22 = d21 * (d21 * s11 + d22 * s12) + d22 * (d21 * s12 + d22 * s22)
        if u11 % (2 * ell) or u22 % (2 * ell) or u12 % ell:
            continue
        n0, r0, m0 = u11 // (2 * ell), u12 // ell, u22 // (2 * ell)
        # character sum over B-representatives: sum of e(tr(T' D^t B)/ell);
        # rational iff the nonzero residues occur with one common multiplicity
        # mu, and then the sum is count(0) - mu
        residues = {}
        for bmat in breps:
            s = _dt_b(dmat, bmat)
            tr = n * s[0] + r * s[1] + m * s[2]
            residues[tr % ell] = residues.get(tr % ell, 0) + 1
        nonzero = {c: v for c, v in residues.items() if c % ell}
        if not nonzero:
            charsum = residues.get(0, 0)
        else:
            mults = set(nonzero.values())
            if len(mults) != 1 or len(nonzero) != ell - 1:
                raise RuntimeError(
                    f"non-rational character sum pattern {residues} at ell={ell}"
                )
            charsum = residues.get(0, 0) - mults.pop()
        if charsum == 0:
            continue
        val = fexp.a(n0, r0, m0)
        term = val * (norm * charsum / Fraction(det_d) ** k)
        total = term if total is None else total + term
    if total is None:
        total = Fraction(0)
    return total


def _dt_b(dmat, bmat):
    """(s11, s12, s22) of the symmetric matrix D^t B."""
    d11, d12 = dmat[0]
    d21, d22 = dmat[1]
    b11, b12 = bmat[0]
    b21, b22 = bmat[1]
    s11 = d11 * b11 + d21 * b21
    s12 = d11 * b12 + d21 * b22
    s21 = d12 * b11 + d22 * b21
    s22 = d12 * b12 + d22 * b22
    if s12 != s21:
        raise RuntimeError("B representative violates the symmetry condition")
    return s11, s12, s22


def eigenvalue_extract(fexp: SiegelExpansion, tfexp: SiegelExpansion):
    """The unique lambda with TF = lambda F on all comparable coefficients."""
    lam = None
    witness = []
    for key in tfexp.stored_triples():
        fv = fexp.a(*key)
        tv = tfexp.coeffs[key]
        if not fv:
            if tv:
                raise DomainError(f"not an eigenform: F vanishes at {key}, TF does not")
            continue
        ratio = tv / fv
        witness.append((key, ratio))
        if lam is None:
            lam = ratio
        elif lam != ratio:
            raise DomainError(f"not an eigenform: ratio conflict at {key}")
    if lam is None:
        raise DomainError("F vanishes on the whole comparison range")
    return lam
