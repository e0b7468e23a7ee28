"""Number fields Q[x]/(g) and prime fields, with degree-1 reduction maps.

NumberField doubles as the ring tag for Poly/linalg, so Hecke eigenvalue work
(polynomials and matrices over the eigenfield) reuses the generic machinery.
"""

from fractions import Fraction

from ..errors import DomainError
from .factor import is_irreducible_rational
from .integers import frac_valuation, is_probable_prime, valuation
from .poly import Poly, QQ, resultant


class NumberField:
    """Q[alpha] for alpha a root of an irreducible polynomial over Q.

    The defining polynomial is stored monic; elements are coefficient vectors
    in the power basis 1, alpha, ..., alpha^(deg-1).
    """

    is_field = True
    is_nf = True

    def __init__(self, defining: Poly, check_irreducible: bool = True):
        if defining.ring is not QQ:
            raise DomainError("defining polynomial must have rational coefficients")
        if defining.degree < 1:
            raise DomainError("defining polynomial must be nonconstant")
        monic = defining.monic()
        if check_irreducible and not is_irreducible_rational(monic):
            raise DomainError("defining polynomial is reducible over Q")
        self.defining = monic
        self.degree = monic.degree
        # reduction table: alpha^(deg+i) as vectors, i = 0..deg-2
        d = self.degree
        self._red = []
        cur = [-c for c in monic.coeffs[:-1]]
        self._red.append(list(cur))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            cur = [shifted[i] + top * self._red[0][i] for i in range(d)]
            self._red.append(list(cur))
        self.zero = NFElement(self, [Fraction(0)] * d)
        self.one = NFElement(self, [Fraction(1)] + [Fraction(0)] * (d - 1))

    def coerce(self, x):
        if isinstance(x, NFElement):
            if x.field is not self:
                raise DomainError("element of a different number field")
            return x
        d = self.degree
        return NFElement(self, [Fraction(x)] + [Fraction(0)] * (d - 1))

    def gen(self):
        """The class of x, a root of the defining polynomial."""
        d = self.degree
        if d == 1:
            return self.coerce(-self.defining.coeffs[0])
        v = [Fraction(0)] * d
        v[1] = Fraction(1)
        return NFElement(self, v)

    def from_poly(self, f: Poly):
        red = list((f % self.defining).coeffs)
        red += [Fraction(0)] * (self.degree - len(red))
        return NFElement(self, red)

    def __repr__(self):
        return f"NumberField({self.defining!r})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining == other.defining

    def __hash__(self):
        return hash(("NumberField", self.defining.coeffs))


class NFElement:
    __slots__ = ("field", "vec")

    def __init__(self, field: NumberField, vec):
        if len(vec) != field.degree:
            raise DomainError("coefficient vector has wrong length")
        self.field = field
        self.vec = tuple(Fraction(c) for c in vec)

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise DomainError("mixed number fields")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._coerce(other)
        return NFElement(self.field, [a + b for a, b in zip(self.vec, o.vec)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NFElement(self.field, [a - b for a, b in zip(self.vec, o.vec)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.vec])

    def __mul__(self, other):
        if not isinstance(other, NFElement):
            c = Fraction(other)
            return NFElement(self.field, [a * c for a in self.vec])
        o = self._coerce(other)
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(o.vec):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        for i in range(d, 2 * d - 1):
            c = prod[i]
            if c:
                red = self.field._red[i - d]
                for t in range(d):
                    out[t] += c * red[t]
        return NFElement(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, NFElement):
            c = Fraction(other)
            if c == 0:
                raise ZeroDivisionError
            return NFElement(self.field, [a / c for a in self.vec])
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.vec == other.vec
        if isinstance(other, (int, Fraction)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.vec))

    def __bool__(self):
        return any(self.vec)

    def is_rational(self) -> bool:
        return not any(self.vec[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is not rational")
        return self.vec[0]

    def to_poly(self) -> Poly:
        return Poly(list(self.vec), QQ)

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        g = self.field.defining
        r0, r1 = g, self.to_poly()
        t0, t1 = Poly([], QQ), Poly([Fraction(1)], QQ)
        while r1.degree > 0:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        if r1.is_zero():
            raise DomainError("defining polynomial not irreducible")
        inv_c = Fraction(1) / r1.coeffs[0]
        return self.field.from_poly(t1 * inv_c)

    def norm(self) -> Fraction:
        """Field norm N(self) = resultant(g, elem)(up to the monic convention)."""
        f = self.to_poly()
        if f.is_zero():
            return Fraction(0)
        return Fraction(resultant(self.field.defining, f))

    def trace(self) -> Fraction:
        d = self.field.degree
        tr = Fraction(0)
        # trace of multiplication matrix
        basis = [self.field.one]
        gen = self.field.gen()
        for _ in range(d - 1):
            basis.append(basis[-1] * gen)
        for i in range(d):
            tr += (self * basis[i]).vec[i]
        return tr

    def denominator_lcm(self) -> int:
        import math

        return math.lcm(*[c.denominator for c in self.vec])

    def __repr__(self):
        return f"NFElement({list(self.vec)})"


class PrimeField:
    """The field F_p as a ring tag; elements are PrimeFieldElement."""

    is_field = True

    def __init__(self, p: int):
        if p < 3 or not is_probable_prime(p):
            raise DomainError(f"{p} is not an odd prime")
        self.p = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.modulus != self.p:
                raise DomainError("mixed prime fields")
            return x
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise DomainError(f"{self.p} divides a denominator")
            return PrimeFieldElement(
                x.numerator * pow(den, self.p - 2, self.p) % self.p, self.p
            )
        return PrimeFieldElement(int(x) % self.p, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class PrimeFieldElement:
    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _check(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise DomainError("mixed moduli")
            return other.residue
        if isinstance(other, Fraction):
            den = other.denominator % self.modulus
            if den == 0:
                raise DomainError(f"{self.modulus} divides a denominator")
            return other.numerator * pow(den, self.modulus - 2, self.modulus)
        return int(other)

    def __add__(self, other):
        return PrimeFieldElement(self.residue + self._check(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.residue - self._check(other), self.modulus)

    def __rsub__(self, other):
        return PrimeFieldElement(self._check(other) - self.residue, self.modulus)

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __mul__(self, other):
        return PrimeFieldElement(self.residue * self._check(other), self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other) % self.modulus
        if o == 0:
            raise ZeroDivisionError
        return PrimeFieldElement(
            self.residue * pow(o, self.modulus - 2, self.modulus), self.modulus
        )

    def __rtruediv__(self, other):
        if self.residue == 0:
            raise ZeroDivisionError
        inv = pow(self.residue, self.modulus - 2, self.modulus)
        return PrimeFieldElement(self._check(other) * inv, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return (1 / self) ** (-e)
        return PrimeFieldElement(pow(self.residue, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"PrimeFieldElement({self.residue} mod {self.modulus})"


def nf_reduce_deg1(e: NFElement, p: int, root: int) -> PrimeFieldElement:
    """Reduce e at the degree-1 prime above p determined by a root of g mod p.

    Evaluates the coefficient vector at the root; requires root to actually be
    a root of the defining polynomial mod p and denominators prime to p.
    """
    g = e.field.defining
    den = 1
    for c in g.coeffs:
        den = den * (c.denominator % p) % p
    if den == 0:
        raise DomainError(f"{p} divides a denominator of the defining polynomial")
    gval = 0
    for c in reversed(g.coeffs):
        num = c.numerator % p
        dinv = pow(c.denominator % p, p - 2, p)
        gval = (gval * root + num * dinv) % p
    if gval != 0:
        raise DomainError(f"{root} is not a root of the defining polynomial mod {p}")
    acc = 0
    for c in reversed(e.vec):
        if c.denominator % p == 0:
            raise DomainError(f"{p} divides a denominator of the element")
        acc = (acc * root + c.numerator * pow(c.denominator % p, p - 2, p)) % p
    return PrimeFieldElement(acc, p)


def nf_valuation(e: NFElement, p: int) -> Fraction:
    """p-valuation of the field norm of e (exact integer as Fraction)."""
    n = e.norm()
    return frac_valuation(n, p)
