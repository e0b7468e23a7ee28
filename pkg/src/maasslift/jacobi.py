"""Index-1 Jacobi cusp forms and the bridge to Kohnen's plus space.

An index-1 form of even weight is determined by one-variable data c(D),
D = r^2 - 4n <= 0, stored here as an array over N = |D| (supported on
N = 0, 3 mod 4).  The two cusp generators of weight 10 and 12 are built from
the index-1 Jacobi-Eisenstein series of weight 4 and 6, whose coefficients
are Cohen's numbers H(k-1, N); every constant is derived at build time from
the Bernoulli machinery and the generators are normalized to c(-3) = 1.

Multiplication by a level-1 form F acts through c'(N) = sum_m a_F(m) c(N-4m),
which is a pair of integer convolutions (one per residue class of N mod 4).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels, records
from .errors import DomainError, PrecisionError
from .exactnum import smallest_prime_factor_sieve
from .level1 import dim_modforms
from .lfun.bernoulli import bernoulli_quadratic, rational_bernoulli
from .qexp import QExpansion, eisenstein


# ------------------------------------------------------------- Cohen numbers


def _mu(n, spf):
    out = 1
    while n > 1:
        p = spf[n]
        n //= p
        if n % p == 0:
            return 0
        out = -out
    return out


def _sigma(n, power):
    out = 0
    for d in range(1, n + 1):
        if n % d == 0:
            out += d**power
    return out


def cohen_number(r: int, n: int) -> Fraction:
    """Cohen's H(r, N) for a single N (reference path, small N)."""
    table = cohen_table(r, n)
    return table[n]


_COHEN_CACHE: dict = {}


def cohen_table(r: int, n_max: int) -> list:
    """[H(r, N) for N = 0..n_max], exact rationals.

    H(r, 0) = zeta(1-2r); for (-1)^r N = D0 f^2 (D0 fundamental),
    H(r, N) = L(1-r, chi_{D0}) sum_{d|f} mu(d) chi_{D0}(d) d^{r-1}
    sigma_{2r-1}(f/d); zero when (-1)^r N = 2, 3 mod 4.
    """
    cached = _COHEN_CACHE.get(r)
    if cached is not None and len(cached) > n_max:
        return cached[: n_max + 1]
    spf = smallest_prime_factor_sieve(max(n_max, 4))
    sign = -1 if r % 2 else 1
    zeta_val = -rational_bernoulli(2 * r) / (2 * r)
    lvals: dict = {}
    out = [Fraction(0)] * (n_max + 1)
    out[0] = zeta_val
    from .exactnum import kronecker

    for n in range(1, n_max + 1):
        disc = sign * n
        if disc % 4 not in (0, 1):
            continue
        # split disc = d0 * f^2 with d0 fundamental, via the spf sieve
        f = 1
        m = n
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
        d0 = disc // (f * f)
        while d0 % 4 in (2, 3):
            f //= 2
            d0 = disc // (f * f)
        lv = lvals.get(d0)
        if lv is None:
            lv = -bernoulli_quadratic(r, d0) / r
            lvals[d0] = lv
        acc = 0
        for d in range(1, f + 1):
            if f % d == 0:
                mu = _mu(d, spf)
                if mu:
                    acc += mu * kronecker(d0, d) * d ** (r - 1) * _sigma(f // d, 2 * r - 1)
        out[n] = lv * acc
    if cached is None or len(cached) <= n_max:
        _COHEN_CACHE[r] = out
    return out


# ------------------------------------------------------------ JacobiForm1


@dataclass(frozen=True)
class JacobiForm1:
    """Index-1 Jacobi form of even weight, as c(D) indexed by N = |D|."""

    weight: int
    coeffs: tuple  # coeffs[N] = c(-N), N = 0..d_max
    is_cusp: bool = True

    def __post_init__(self):
        if self.weight % 2:
            raise DomainError("index-1 Jacobi forms of odd weight vanish identically")
        for n, c in enumerate(self.coeffs):
            if n % 4 in (1, 2) and c != 0:
                raise DomainError(f"support violation at |D| = {n}")

    @property
    def d_max(self) -> int:
        return len(self.coeffs) - 1

    def c(self, disc: int):
        """Coefficient c(D) at a discriminant D <= 0."""
        if disc > 0:
            return Fraction(0)
        n = -disc
        if n > self.d_max:
            raise PrecisionError(f"|D| = {n} beyond stored bound {self.d_max}")
        return self.coeffs[n]

    def c_two_var(self, n: int, r: int):
        """c(n, r) in the two-variable indexing (depends on r^2 - 4n only)."""
        return self.c(r * r - 4 * n)

    def __add__(self, other):
        if other.weight != self.weight:
            raise DomainError("weight mismatch")
        m = min(self.d_max, other.d_max)
        return JacobiForm1(
            self.weight,
            tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1])),
            self.is_cusp and other.is_cusp,
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s) -> "JacobiForm1":
        s = Fraction(s)
        return JacobiForm1(self.weight, tuple(s * c for c in self.coeffs), self.is_cusp)

    def mul_form(self, f: QExpansion) -> "JacobiForm1":
        """Multiply by a level-1 modular form: c'(N) = sum_m a_f(m) c(N - 4m)."""
        n_max = min(self.d_max, 4 * f.prec - 1)
        out = _convolve_by_class(list(self.coeffs), [Fraction(c) for c in f.coeffs], n_max)
        cusp = self.is_cusp or f.a(0) == 0
        return JacobiForm1(self.weight + f.weight, tuple(out), cusp)

    def specialize_z0(self, prec: int) -> QExpansion:
        """phi(tau, 0) = sum_n (sum_r c(4n - r^2)) q^n, a weight-k form."""
        if 4 * (prec - 1) > self.d_max:
            raise PrecisionError("insufficient discriminant range")
        out = []
        for n in range(prec):
            acc = Fraction(0)
            r = 0
            while r * r <= 4 * n:
                term = self.c(r * r - 4 * n)
                acc += term if r == 0 else 2 * term
                r += 1
            out.append(acc)
        return QExpansion(self.weight, out)


def _convolve_by_class(cs, fs, n_max):
    """sum_m fs[m] * cs[N - 4m] per residue class of N mod 4, via integer NTT."""
    den_c = math.lcm(*[c.denominator for c in cs]) if cs else 1
    den_f = math.lcm(*[c.denominator for c in fs]) if fs else 1
    ci = [int(c * den_c) for c in cs]
    fi = [int(c * den_f) for c in fs]
    out = [Fraction(0)] * (n_max + 1)
    den = den_c * den_f
    for rho in (0, 3):
        cls = ci[rho::4]
        if not cls:
            continue
        conv = _kernels.convolve_int(fi, cls)
        for i, v in enumerate(conv):
            n = 4 * i + rho
            if n <= n_max and v:
                out[n] = Fraction(v, den)
    return out


def jacobi_eisenstein(k: int, d_max: int) -> JacobiForm1:
    """E_{k,1} normalized to c(0) = 1; coefficients H(k-1, N)/zeta(3-2k)."""
    if k % 2 or k < 4:
        raise DomainError("Jacobi-Eisenstein weight must be even and >= 4")
    table = cohen_table(k - 1, d_max)
    inv = Fraction(1) / table[0]
    return JacobiForm1(k, tuple(inv * h for h in table), is_cusp=False)


_GEN_CACHE: dict = {}


def jacobi_generators(d_max: int):
    """The weight-10 and weight-12 index-1 cusp generators, c(-3) = 1.

    phi10 = E4 E_{6,1} - E6 E_{4,1} and phi12 = E4^2 E_{4,1} - E6 E_{6,1},
    rescaled; integrality of the result is asserted, not assumed.
    """
    if d_max < 4:
        raise DomainError("need discriminant range at least 4")
    hit = _GEN_CACHE.get("gens")
    if hit is not None and hit[0].d_max >= d_max:
        return tuple(JacobiForm1(f.weight, f.coeffs[: d_max + 1], f.is_cusp) for f in hit)
    construction = {"op": "jacobi-generators", "d_max": d_max}
    rec = records.cache_get(construction)
    if rec is not None:
        pair = tuple(
            JacobiForm1(w, tuple(Fraction(int(s)) for s in rec.payload[key]), True)
            for w, key in ((10, "phi10"), (12, "phi12"))
        )
        _GEN_CACHE["gens"] = pair
        return pair
    prec_q = d_max // 4 + 2
    e4 = eisenstein(4, prec_q)
    e6 = eisenstein(6, prec_q)
    ej4 = jacobi_eisenstein(4, d_max)
    ej6 = jacobi_eisenstein(6, d_max)
    phi10 = ej6.mul_form(e4) - ej4.mul_form(e6)
    phi12 = ej4.mul_form(e4 * e4) - ej6.mul_form(e6)
    out = []
    for phi in (phi10, phi12):
        lead = phi.coeffs[3]
        if lead == 0:
            raise RuntimeError("generator has vanishing c(-3)")
        phi = phi.scale(Fraction(1) / lead)
        if phi.coeffs[0] != 0:
            raise RuntimeError("generator failed to be cuspidal")
        if any(c.denominator != 1 for c in phi.coeffs):
            raise RuntimeError("generator coefficients failed to be integral")
        out.append(phi)
    pair = (out[0], out[1])
    rec = records.FormRecord(
        kind="basis",
        weight=10,
        precision=d_max,
        payload={
            "phi10": [records.encode_number(c) for c in pair[0].coeffs],
            "phi12": [records.encode_number(c) for c in pair[1].coeffs],
        },
        construction=construction,
    )
    records.cache_put(construction, rec)
    _GEN_CACHE["gens"] = pair
    return pair


def _modform_monomials(w: int, prec: int):
    """The monomial basis E4^a E6^b of M_w (w even >= 0)."""
    out = []
    if w < 0 or w % 2:
        return out
    for b in range(w // 6 + 1):
        rest = w - 6 * b
        if rest % 4 == 0:
            a = rest // 4
            if w == 0:
                out.append(QExpansion(0, [Fraction(1)] + [Fraction(0)] * (prec - 1)))
            else:
                f = eisenstein(4, prec) ** a if a else QExpansion(
                    0, [Fraction(1)] + [Fraction(0)] * (prec - 1)
                )
                if b:
                    f = f * (eisenstein(6, prec) ** b)
                out.append(f)
    return out


def jacobi_cusp_basis(k: int, d_max: int) -> list:
    """Basis of J^cusp_{k,1} as M_{k-10} phi10 + M_{k-12} phi12.

    Odd weight returns the empty basis (odd-weight index-1 forms vanish).
    """
    if k % 2:
        return []
    if k < 10:
        return []
    phi10, phi12 = jacobi_generators(d_max)
    prec_q = d_max // 4 + 2
    out = [phi10.mul_form(m) for m in _modform_monomials(k - 10, prec_q)]
    out += [phi12.mul_form(m) for m in _modform_monomials(k - 12, prec_q)]
    expected = dim_modforms(k - 10) + dim_modforms(k - 12)
    if len(out) != expected:
        raise RuntimeError("cusp basis dimension mismatch")
    return out


def dim_jacobi_cusp(k: int) -> int:
    if k % 2 or k < 10:
        return 0
    return dim_modforms(k - 10) + dim_modforms(k - 12)


# ------------------------------------------------------------- Kohnen forms


@dataclass(frozen=True)
class KohnenForm:
    """Plus-space form of weight k - 1/2: a(n) for 1 <= n <= prec."""

    weight_twice: int  # 2k - 1
    coeffs: tuple  # coeffs[n] = a(n), index 0 unused (0)

    @property
    def weight(self) -> Fraction:
        return Fraction(self.weight_twice, 2)

    @property
    def k(self) -> int:
        return (self.weight_twice + 1) // 2

    @property
    def prec(self) -> int:
        return len(self.coeffs) - 1

    def a(self, n: int):
        if n < 1:
            return Fraction(0)
        if n > self.prec:
            raise PrecisionError(f"coefficient {n} beyond precision {self.prec}")
        return self.coeffs[n]

    def __add__(self, other):
        if other.weight_twice != self.weight_twice:
            raise DomainError("weight mismatch")
        m = min(self.prec, other.prec)
        return KohnenForm(
            self.weight_twice,
            tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1])),
        )

    def scale(self, s):
        s = Fraction(s)
        return KohnenForm(self.weight_twice, tuple(s * c for c in self.coeffs))


def ez_to_kohnen(phi: JacobiForm1) -> KohnenForm:
    """Eichler-Zagier isomorphism: a_g(|D|) = c(D), weight k - 1/2."""
    return KohnenForm(2 * phi.weight - 1, phi.coeffs)


def plus_space_check(g: KohnenForm) -> list:
    """Indices violating the plus-space support condition, empty when clean."""
    k = g.k
    bad = (2, 3) if k % 2 else (1, 2)
    return [n for n in range(1, g.prec + 1) if n % 4 in bad and g.coeffs[n] != 0]
