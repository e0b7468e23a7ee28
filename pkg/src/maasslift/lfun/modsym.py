"""Level-1 modular symbols of even weight w: Manin presentation and Hecke.

Generators are the monomials X^i Y^(w-2-i) carrying the class of the path
{0 -> oo}; the right action is (P|g)(X, Y) = P(aX + bY, cX + dY).  The space
is the quotient by the Manin relations P + P|sigma and P + P|tau + P|tau^2
(sigma of order 4, tau of order 3).  Arbitrary paths reduce to this
presentation through continued-fraction convergents; Hecke operators act by a
precomputed Heilbronn-type matrix list built from the same path machinery.

Conventions are pinned by the test suite against a numerical pairing oracle
(the integral of f(z) P(z,1) dz along vertical paths) and by the classical
eigenvalue data of weight 12.
"""

import math
from fractions import Fraction

from ..errors import DomainError
from ..exactnum import kernel_basis, rref

SIGMA = ((0, -1), (1, 0))
TAU = ((0, -1), (1, -1))
ETA = ((-1, 0), (0, 1))


def _binom_row(a, b, e):
    """Coefficients of (a X + b Y)^e as [X^e, X^(e-1)Y, ..., Y^e]."""
    out = []
    for t in range(e + 1):
        out.append(math.comb(e, t) * a ** (e - t) * b**t)
    return out


def action_matrix(g, n):
    """Matrix of P -> P|g on the monomial basis X^i Y^(n-1-i), i = 0..n-1.

    Column i holds the expansion of (aX+bY)^i (cX+dY)^(n-1-i); entries are
    indexed by X-degree to match the basis.
    """
    (a, b), (c, d) = g
    cols = []
    for i in range(n):
        left = _binom_row(a, b, i)
        right = _binom_row(c, d, n - 1 - i)
        out = [0] * n
        for s, x in enumerate(left):
            if x:
                for t, y in enumerate(right):
                    if y:
                        # s, t count Y-degrees; X-degree is n-1-(s+t)
                        out[n - 1 - s - t] += x * y
        cols.append(out)
    return [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]


def _mat_mul2(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def manin_path(alpha, beta):
    """{alpha -> beta} as [(sign, gamma)] with sum sign * {gamma 0 -> gamma oo}.

    Cusps are primitive pairs (p, q), with (1, 0) for oo.
    """
    return [(-s, g) for s, g in _path_from_inf(alpha)] + list(_path_from_inf(beta))


def _path_from_inf(cusp):
    """{oo -> cusp} in unimodular steps."""
    p, q = cusp
    if q == 0:
        return []
    if q < 0:
        p, q = -p, -q
    # continued fraction convergents of p/q
    terms = []
    a, b = p, q
    while b:
        quo = a // b
        terms.append(quo)
        a, b = b, a - quo * b
    pm1, qm1 = 1, 0
    pc, qc = terms[0], 1
    out = [(1, _step_matrix(pm1, qm1, pc, qc, 0))]
    for t in range(1, len(terms)):
        pn = terms[t] * pc + pm1
        qn = terms[t] * qc + qm1
        out.append((1, _step_matrix(pc, qc, pn, qn, t)))
        pm1, qm1, pc, qc = pc, qc, pn, qn
    return out


def _step_matrix(p_prev, q_prev, p_cur, q_cur, t):
    s = 1 if (t + 1) % 2 == 0 else -1
    g = ((p_cur, s * p_prev), (q_cur, s * q_prev))
    if g[0][0] * g[1][1] - g[0][1] * g[1][0] != 1:
        raise RuntimeError("path step is not unimodular")
    return g


def _adjugate(g):
    (a, b), (c, d) = g
    return ((d, -b), (-c, a))


def heilbronn_matrices(ell: int):
    """Determinant-ell matrices h with T_ell [P] = sum [P|h], from Manin paths."""
    mats = []
    cosets = [((1, j), (0, ell)) for j in range(ell)] + [((ell, 0), (0, 1))]
    for g in cosets:
        tg = _adjugate(g)
        (a, b), (c, d) = g
        start = (b, d)  # g . 0
        end = (a, c)  # g . oo
        gst = math.gcd(start[0], start[1])
        start = (start[0] // gst, start[1] // gst) if gst else start
        gen = math.gcd(end[0], end[1])
        end = (end[0] // gen, end[1] // gen) if gen else end
        for sign, gamma in manin_path(start, end):
            mats.append((sign, _mat_mul2(tg, gamma)))
    return mats


class SymbolSpace:
    """Relation-reduced Manin symbols of weight w, with star and boundary.

    ``column_order`` relabels the Manin generators before reduction; any
    permutation yields the same space with a different integral presentation
    (the unit-invariance property tests exercise this).
    """

    def __init__(self, w: int, column_order=None):
        if w % 2 or w < 12:
            raise DomainError("weight must be even and >= 12")
        self.weight = w
        n = w - 1
        self.n_gens = n
        order = list(column_order) if column_order is not None else list(range(n))
        if sorted(order) != list(range(n)):
            raise DomainError("column_order must be a permutation of the generators")
        rel_rows = []
        act_sigma = action_matrix(SIGMA, n)
        act_tau = action_matrix(TAU, n)
        act_tau2 = action_matrix(_mat_mul2(TAU, TAU), n)
        for i in range(n):
            row1 = [Fraction(0)] * n
            row1[i] += 1
            for s in range(n):
                row1[s] += act_sigma[s][i]
            rel_rows.append([row1[order[t]] for t in range(n)])
            row2 = [Fraction(0)] * n
            row2[i] += 1
            for s in range(n):
                row2[s] += act_tau[s][i] + act_tau2[s][i]
            rel_rows.append([row2[order[t]] for t in range(n)])
        red, pivots = rref(rel_rows)
        free = [c for c in range(n) if c not in pivots]
        self.dim = len(free)
        self._free = [order[t] for t in free]
        # generator classes in quotient coordinates (original labels)
        gen_to_q = [None] * n
        pivot_row = {c: r for r, c in enumerate(pivots)}
        for t in range(n):
            j = order[t]
            if t in pivot_row:
                r = pivot_row[t]
                gen_to_q[j] = [-red[r][f] for f in free]
            else:
                gen_to_q[j] = [Fraction(1) if f == t else Fraction(0) for f in free]
        self._gen_to_q = gen_to_q
        self.star = self._push_action(action_matrix(ETA, n))
        # boundary of [P] = P(1, 0) - P(0, 1): functional on generators
        bd_gen = [Fraction(0)] * n
        bd_gen[n - 1] += 1
        bd_gen[0] -= 1
        bd_perm = [bd_gen[order[t]] for t in range(n)]
        self.boundary = self._descend_functional(bd_perm, red, pivots, free)
        self._hecke_cache = {}
        self._cusp_cache = {}

    # -- internal plumbing ---------------------------------------------------
    def _push_action(self, act):
        """Quotient matrix of a generator-level action (columns = images)."""
        n = self.n_gens
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for idx, j in enumerate(self._free):
            img = [act[s][j] for s in range(n)]
            vec = self._gen_vector_to_q(img)
            for t in range(self.dim):
                out[t][idx] = vec[t]
        return out

    def _gen_vector_to_q(self, vec):
        out = [Fraction(0)] * self.dim
        for j, c in enumerate(vec):
            if c:
                row = self._gen_to_q[j]
                for t in range(self.dim):
                    out[t] += c * row[t]
        return out

    def _descend_functional(self, bd_gen, red, pivots, free):
        """Boundary functional in quotient coordinates (checked to descend)."""
        vals = [Fraction(0)] * self.dim
        for idx, j in enumerate(free):
            vals[idx] = bd_gen[j]
        # pivot generators: e_p = -sum red[r][f] e_f; their boundary must agree
        for r, p in enumerate(pivots):
            lhs = bd_gen[p]
            rhs = -sum(red[r][f] * bd_gen[f] for f in free)
            if lhs != rhs:
                raise RuntimeError("boundary functional fails to descend")
        return vals

    # -- public surface --------------------------------------------------------
    def class_of_monomial_path(self, i: int, alpha, beta):
        """Class of X^i Y^(w-2-i) tensor {alpha -> beta} in quotient coords."""
        vec = [Fraction(0)] * self.n_gens
        vec[i] = Fraction(1)
        return self.class_of_poly_path(vec, alpha, beta)

    def class_of_poly_path(self, poly_vec, alpha, beta):
        """Class of P tensor {alpha -> beta} for an arbitrary polynomial P."""
        n = self.n_gens
        out = [Fraction(0)] * self.dim
        for sign, gamma in manin_path(alpha, beta):
            act = action_matrix(gamma, n)
            img = [
                sum(act[s][i] * poly_vec[i] for i in range(n) if poly_vec[i])
                for s in range(n)
            ]
            vec = self._gen_vector_to_q(img)
            for t in range(self.dim):
                out[t] += sign * vec[t]
        return out

    def hecke(self, ell: int):
        """Matrix of T(ell) on the quotient (columns = images of basis)."""
        cached = self._hecke_cache.get(ell)
        if cached is not None:
            return cached
        n = self.n_gens
        acts = [
            (sign, action_matrix(h, n)) for sign, h in heilbronn_matrices(ell)
        ]
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for idx, j in enumerate(self._free):
            img = [Fraction(0)] * n
            for sign, act in acts:
                for s in range(n):
                    v = act[s][j]
                    if v:
                        img[s] += sign * v
            vec = self._gen_vector_to_q(img)
            for t in range(self.dim):
                out[t][idx] = vec[t]
        self._hecke_cache[ell] = out
        return out

    def boundary_of(self, vec) -> Fraction:
        return sum(b * v for b, v in zip(self.boundary, vec))

    def manin_lattice_basis(self):
        """Z-basis of the lattice spanned by all generator classes.

        This lattice is presentation-independent (any relabeling of the Manin
        generators maps it to itself), so content-1 normalizations taken in
        its coordinates change only by a unit across presentations.
        """
        cached = self._cusp_cache.get("lattice")
        if cached is not None:
            return cached
        den = 1
        for row in self._gen_to_q:
            for c in row:
                den = math.lcm(den, c.denominator)
        int_rows = [[int(c * den) for c in row] for row in self._gen_to_q]
        from ..exactnum import hermite_row_basis

        hnf = hermite_row_basis(int_rows)
        if len(hnf) != self.dim:
            raise RuntimeError("generator classes fail to span the quotient")
        basis = [[Fraction(x, den) for x in row] for row in hnf]
        self._cusp_cache["lattice"] = basis
        return basis

    def _lattice_sub_basis(self, condition_rows):
        """Z-basis of (Manin lattice) cap (kernel of the rational conditions)."""
        lat = self.manin_lattice_basis()
        cond = []
        for row in condition_rows:
            # condition applied to each lattice basis vector
            vals = [sum(row[i] * b[i] for i in range(self.dim)) for b in lat]
            den = math.lcm(*[v.denominator for v in vals])
            cond.append([int(v * den) for v in vals])
        from ..exactnum import integer_kernel

        kern = integer_kernel(cond)
        out = []
        for coords in kern:
            vec = [
                sum(Fraction(coords[t]) * lat[t][i] for t in range(self.dim))
                for i in range(self.dim)
            ]
            out.append(vec)
        return out

    def cuspidal_eigenspace_basis(self, sign: int):
        """Z-basis of the sign-eigenspace of the cuspidal Manin lattice."""
        key = ("cusp", sign)
        cached = self._cusp_cache.get(key)
        if cached is not None:
            return cached
        rows = [list(self.boundary)]
        for i in range(self.dim):
            rows.append(
                [self.star[i][j] - (1 if i == j else 0) * sign for j in range(self.dim)]
            )
        basis = self._lattice_sub_basis(rows)
        self._cusp_cache[key] = basis
        return basis

    def eigenspace_basis(self, sign: int):
        """Basis of the full sign-eigenspace (boundary part included)."""
        key = ("full", sign)
        cached = self._cusp_cache.get(key)
        if cached is not None:
            return cached
        rows = []
        for i in range(self.dim):
            rows.append(
                [self.star[i][j] - (1 if i == j else 0) * sign for j in range(self.dim)]
            )
        basis = [_content_one(v) for v in kernel_basis(rows)]
        self._cusp_cache[key] = basis
        return basis

    def winding_symbol(self, j: int, chi=None):
        """Class of sum_a chi(a) (N X - a Y)^(j-1) Y^(w-1-j) {oo -> a/N}.

        The cusp-centered polynomial (Birch-Manin twisting) makes the class
        independent of the residue representatives and a star eigenvector of
        sign (-1)^(j-1) chi(-1); the trivial character gives
        X^(j-1) Y^(w-1-j) {oo -> 0}.
        """
        w = self.weight
        if not 1 <= j <= w - 1:
            raise DomainError(f"{j} outside the critical strip 1..{w-1}")
        if chi is None or chi.modulus == 1:
            return self.class_of_monomial_path(j - 1, (1, 0), (0, 1))
        n_mod = chi.modulus
        out = [Fraction(0)] * self.dim
        for a in range(1, n_mod):
            c = chi(a)
            if c == 0:
                continue
            poly = [Fraction(0)] * self.n_gens
            for i in range(j):
                # coefficient of X^i Y^(w-2-i) in (N X - a Y)^(j-1) Y^(w-1-j)
                poly[i] = Fraction(
                    math.comb(j - 1, i) * n_mod**i * (-a) ** (j - 1 - i)
                )
            vec = self.class_of_poly_path(poly, (1, 0), (a, n_mod))
            for t in range(self.dim):
                out[t] += c * vec[t]
        return out


def _content_one(vec):
    den = math.lcm(*[c.denominator for c in vec])
    ints = [int(c * den) for c in vec]
    g = math.gcd(*[abs(v) for v in ints])
    if g == 0:
        return [Fraction(0)] * len(vec)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [Fraction(v, g) for v in ints]


_SPACE_CACHE: dict = {}


def symbol_space(w: int) -> SymbolSpace:
    space = _SPACE_CACHE.get(w)
    if space is None:
        space = SymbolSpace(w)
        _SPACE_CACHE[w] = space
    return space
