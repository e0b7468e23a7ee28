"""Truncated q-expansions at level 1 and the classical generators E4, E6, Delta.

Precision is explicit everywhere: an expansion knows a(0..prec-1) and refuses
to answer past that.  Products take the minimum precision of the inputs and
weights add; Hecke operators divide precision by ell and never truncate
silently.
"""

import math
from fractions import Fraction

from . import _kernels
from .errors import DomainError, PrecisionError
from .exactnum import QQ
from .lfun.bernoulli import rational_bernoulli

_NTT_CUTOFF = 64


class QExpansion:
    """A weight-k level-1 form known to precision N: coefficients a(0..N-1)."""

    __slots__ = ("weight", "prec", "coeffs", "ring")

    def __init__(self, weight: int, coeffs, ring=QQ):
        self.weight = weight
        self.coeffs = tuple(ring.coerce(c) for c in coeffs)
        self.prec = len(self.coeffs)
        self.ring = ring
        if self.prec < 1:
            raise PrecisionError("empty expansion")

    def a(self, n: int):
        if n < 0:
            return self.ring.zero
        if n >= self.prec:
            raise PrecisionError(f"coefficient {n} beyond precision {self.prec}")
        return self.coeffs[n]

    def truncate(self, prec: int) -> "QExpansion":
        if prec > self.prec:
            raise PrecisionError(f"cannot extend precision {self.prec} to {prec}")
        return QExpansion(self.weight, self.coeffs[:prec], self.ring)

    def is_zero(self) -> bool:
        return all(c == self.ring.zero for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.weight, self.coeffs))

    def __add__(self, other):
        self._compat(other)
        n = min(self.prec, other.prec)
        return QExpansion(
            self.weight, [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], self.ring
        )

    def __sub__(self, other):
        self._compat(other)
        n = min(self.prec, other.prec)
        return QExpansion(
            self.weight, [a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], self.ring
        )

    def __neg__(self):
        return QExpansion(self.weight, [-c for c in self.coeffs], self.ring)

    def scale(self, c) -> "QExpansion":
        c = self.ring.coerce(c)
        return QExpansion(self.weight, [c * x for x in self.coeffs], self.ring)

    def _compat(self, other):
        if not isinstance(other, QExpansion):
            raise DomainError("expected a QExpansion")
        if other.weight != self.weight:
            raise DomainError(f"weight mismatch: {self.weight} vs {other.weight}")
        if other.ring != self.ring:
            raise DomainError("coefficient ring mismatch")

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return self.scale(other)
        if other.ring != self.ring:
            raise DomainError("coefficient ring mismatch")
        n = min(self.prec, other.prec)
        a, b = self.coeffs[:n], other.coeffs[:n]
        if self.ring is QQ and n >= _NTT_CUTOFF:
            out = _rational_convolve(a, b)[:n]
        else:
            out = [self.ring.zero] * n
            for i, x in enumerate(a):
                if x == self.ring.zero:
                    continue
                for j in range(min(n - i, n)):
                    y = b[j]
                    if y != self.ring.zero:
                        out[i + j] = out[i + j] + x * y
        return QExpansion(self.weight + other.weight, out, self.ring)

    __rmul__ = scale

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a q-expansion")
        out = QExpansion(0, [self.ring.one] + [self.ring.zero] * (self.prec - 1), self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def hecke_t(self, ell: int) -> "QExpansion":
        """T(ell) for prime ell: a'(n) = a(ell n) + ell^(w-1) a(n/ell)."""
        out_prec = self.prec // ell
        if out_prec < 1:
            raise PrecisionError(
                f"precision {self.prec} cannot support T({ell}); need at least {ell}"
            )
        w = self.weight
        mult = self.ring.coerce(ell ** (w - 1))
        out = []
        for n in range(out_prec):
            v = self.coeffs[ell * n]
            if n % ell == 0:
                v = v + mult * self.coeffs[n // ell]
            out.append(v)
        return QExpansion(w, out, self.ring)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"QExpansion(weight={self.weight}, prec={self.prec}, [{head}, ...])"


def _rational_convolve(a, b):
    da = math.lcm(*[c.denominator for c in a])
    db = math.lcm(*[c.denominator for c in b])
    ia = [int(c * da) for c in a]
    ib = [int(c * db) for c in b]
    prod = _kernels.convolve_int(ia, ib)
    d = da * db
    return [Fraction(v, d) for v in prod]


def _divisor_power_sums(power: int, prec: int):
    """[sigma_power(n) for n < prec] with sigma(0) = 0."""
    out = [0] * prec
    for d in range(1, prec):
        dp = d**power
        for m in range(d, prec, d):
            out[m] += dp
    return out


def eisenstein(k: int, prec: int) -> QExpansion:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, exact rational."""
    if k % 2 or k < 4:
        raise DomainError("Eisenstein weight must be even and >= 4")
    if prec < 1:
        raise PrecisionError("precision must be positive")
    bk = rational_bernoulli(k)
    c = Fraction(-2 * k) / bk
    sig = _divisor_power_sums(k - 1, prec)
    return QExpansion(k, [Fraction(1)] + [c * s for s in sig[1:]], QQ)


def _eta_power_24(prec: int):
    """Coefficients of prod (1-q^n)^24 to the given precision."""
    euler = [0] * prec
    k = 0
    while True:
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e >= prec:
                continue
            euler[e] += -1 if kk % 2 else 1
        k += 1
        if k * (3 * k - 1) // 2 >= prec and k * (3 * k + 1) // 2 >= prec:
            break
    out = [1] + [0] * (prec - 1)
    base = euler
    e = 24
    while e:
        if e & 1:
            out = _kernels.convolve_int(out, base)[:prec]
        base = _kernels.convolve_int(base, base)[:prec]
        e >>= 1
    return out


_DELTA_CACHE: dict = {}


def delta(prec: int) -> QExpansion:
    """Delta = (E4^3 - E6^2)/1728, cross-checked against q prod(1-q^n)^24."""
    if prec < 1:
        raise PrecisionError("precision must be positive")
    cached = _DELTA_CACHE.get(prec)
    if cached is not None:
        return cached
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    d = (e4 * e4 * e4 - e6 * e6).scale(Fraction(1, 1728))
    eta24 = _eta_power_24(max(prec - 1, 1))
    product_form = [Fraction(0)] + [Fraction(v) for v in eta24[: prec - 1]]
    if list(d.coeffs) != product_form[:prec]:
        raise RuntimeError("Delta self-check failed: E4/E6 route disagrees with eta product")
    _DELTA_CACHE[prec] = d
    return d
