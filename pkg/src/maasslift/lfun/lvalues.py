"""Algebraic critical L-values through the integral symbol normalization.

l_alg(f, j, chi) is the f-isotypic coordinate of the winding symbol
sum_a chi(a) X^(j-1) Y^(w-1-j) {oo -> a/N} inside the star-eigenspace of sign
(-1)^(j-1) chi(-1), written against the content-1 integral eigenvector of
T(2).  Only p-valuations of Galois-orbit norms are canonical; the eigenvector
normalization fixes the implicit periods up to a unit.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError
from ..exactnum import NFElement, frac_valuation, kernel_basis, solve
from .characters import DirichletChar
from .modsym import SymbolSpace, symbol_space

_TRIVIAL = DirichletChar.trivial(1)


@dataclass(frozen=True)
class AlgebraicLValue:
    value: object  # eigenfield element
    point: int
    twist: DirichletChar
    normalization: str = "manin-content-1"

    def is_zero(self) -> bool:
        return not self.value


def _restrict(space: SymbolSpace, mat, basis):
    """Matrix of ``mat`` on the span of ``basis`` (which it must preserve)."""
    dim = space.dim
    gram = [[basis[t][i] for t in range(len(basis))] for i in range(dim)]
    cols = []
    for bvec in basis:
        img = [sum(mat[i][j] * bvec[j] for j in range(dim)) for i in range(dim)]
        x = solve(gram, img)
        if x is None:
            raise RuntimeError("subspace not preserved by the operator")
        cols.append(x)
    return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


def _content_one_nf(vec, field):
    """Scale an eigenfield vector to Z[alpha]-coordinates with content 1."""
    den = 1
    for x in vec:
        den = math.lcm(den, x.denominator_lcm())
    ints = []
    for x in vec:
        ints.extend(int(c) for c in (x * den).vec)
    g = math.gcd(*[abs(v) for v in ints]) or 1
    lead = next((v for v in ints if v), 1)
    if lead < 0:
        g = -g
    scale = Fraction(den, g)
    return [x * scale for x in vec]


class EigenSymbolData:
    """Per-(weight, sign) cache: cuspidal star-eigenspace and f-eigenvector."""

    def __init__(self, newform_data, sign: int, space: SymbolSpace = None):
        from ..exactnum import charpoly

        self.newform = newform_data
        self.sign = sign
        w = newform_data.weight
        self.space = space if space is not None else symbol_space(w)
        self.cusp_basis = self.space.cuspidal_eigenspace_basis(sign)
        self.full_basis = self.space.eigenspace_basis(sign)
        t2 = self.space.hecke(2)
        a_cusp = _restrict(self.space, t2, self.cusp_basis)
        if charpoly(a_cusp) != newform_data.charpoly_t2:
            raise RuntimeError(
                "T(2) on the cuspidal symbol eigenspace disagrees with the Miller-basis charpoly"
            )
        self.t2_full = _restrict(self.space, t2, self.full_basis)
        K = newform_data.field
        alpha = K.gen()
        mat = [
            [K.coerce(a_cusp[i][j]) - (alpha if i == j else K.zero) for j in range(len(a_cusp))]
            for i in range(len(a_cusp))
        ]
        kern = kernel_basis(mat, K)
        if len(kern) != 1:
            raise RuntimeError("symbol eigenline is not one-dimensional")
        u = _content_one_nf(kern[0], K)
        # eigenvector in full quotient coordinates
        dim = self.space.dim
        self.eigvec = [
            sum((u[t] * self.cusp_basis[t][i] for t in range(len(u))), K.zero)
            for i in range(dim)
        ]

    def f_coordinate(self, qvec):
        """c with qvec = c * eigvec + (T2 - alpha) u inside the sign-eigenspace."""
        K = self.newform.field
        alpha = K.gen()
        basis = self.full_basis
        m = len(basis)
        # coordinates of qvec and eigvec in the eigenspace basis
        dim = self.space.dim
        gram = [[basis[t][i] for t in range(m)] for i in range(dim)]
        rhs = solve(gram, qvec)
        if rhs is None:
            raise DomainError("symbol does not lie in the expected star eigenspace")
        gram_k = [[K.coerce(gram[i][t]) for t in range(m)] for i in range(dim)]
        ev = solve(gram_k, self.eigvec, K)
        if ev is None:
            raise RuntimeError("eigenvector escaped its eigenspace")
        # columns: [ev | (T2_full - alpha)]
        cols = [[ev[i]] for i in range(m)]
        for j in range(m):
            col = [
                K.coerce(self.t2_full[i][j]) - (alpha if i == j else K.zero)
                for i in range(m)
            ]
            for i in range(m):
                cols[i].append(col[i])
        mat = [[cols[i][j] for j in range(m + 1)] for i in range(m)]
        sol = solve(mat, [K.coerce(x) for x in rhs], K)
        if sol is None:
            raise RuntimeError("isotypic projection system is inconsistent")
        return sol[0]


_EIGEN_CACHE: dict = {}


def eigen_symbol_data(newform_data, sign: int) -> EigenSymbolData:
    key = (newform_data.weight, sign)
    data = _EIGEN_CACHE.get(key)
    if data is None:
        data = EigenSymbolData(newform_data, sign)
        _EIGEN_CACHE[key] = data
    return data


def l_alg(
    newform_data, j: int, chi: DirichletChar = _TRIVIAL, space: SymbolSpace = None
) -> AlgebraicLValue:
    """Algebraic L-value at the critical point j, twisted by quadratic chi."""
    w = newform_data.weight
    if not 0 < j < w:
        raise DomainError(f"{j} outside the critical strip of weight {w}")
    if any(v not in (-1, 0, 1) for v in chi.values):
        raise DomainError("only quadratic or trivial twists are supported")
    sign = (-1) ** (j - 1) * chi(-1)
    if space is not None:
        data = EigenSymbolData(newform_data, sign, space)
    else:
        data = eigen_symbol_data(newform_data, sign)
    wind = data.space.winding_symbol(j, chi)
    # winding symbols are star eigenvectors of the predicted sign
    star = data.space.star
    dim = data.space.dim
    starred = [sum(star[i][t] * wind[t] for t in range(dim)) for i in range(dim)]
    if starred != [sign * x for x in wind]:
        raise RuntimeError("winding symbol has unexpected star sign")
    value = data.f_coordinate(wind)
    return AlgebraicLValue(value, j, chi)


def l_alg_products(w: int, j: int, chi: DirichletChar, p: int, newform_data=None) -> dict:
    """Field norm of l_alg over Q and its exact p-valuation.

    Returns {"norm": Fraction, "valuation": int or None}; valuation is None
    when the value vanishes identically (central sign -1 points).
    """
    if newform_data is None:
        from ..level1 import newform

        newform_data = newform(w)
    val = l_alg(newform_data, j, chi)
    if isinstance(val.value, NFElement):
        nrm = val.value.norm()
    else:
        nrm = Fraction(val.value) ** 1
    if nrm == 0:
        return {"norm": Fraction(0), "valuation": None}
    return {"norm": nrm, "valuation": frac_valuation(nrm, p)}
