"""Univariate polynomials over an explicit coefficient ring.

The ring is a lightweight tag object exposing ``zero``, ``one``, ``coerce``
and ``is_field``; coefficients themselves carry the arithmetic through
operator overloading (Fraction, NFElement, PrimeFieldElement all qualify).
Coefficients are stored lowest degree first with no trailing zeros.
"""

from fractions import Fraction

from ..errors import DomainError


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)
    is_field = True

    @staticmethod
    def coerce(x):
        return Fraction(x)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class Poly:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring=QQ):
        cs = [ring.coerce(c) if not _same_ring(c, ring) else c for c in coeffs]
        while cs and cs[-1] == ring.zero:
            cs.pop()
        self.coeffs = tuple(cs)
        self.ring = ring

    # -- construction helpers -------------------------------------------------
    @classmethod
    def x(cls, ring=QQ):
        return cls([ring.zero, ring.one], ring)

    @classmethod
    def constant(cls, c, ring=QQ):
        return cls([c], ring)

    # -- structure -------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    @property
    def leading(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    # -- arithmetic --------------------------------------------------------------
    def __add__(self, other):
        other = self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.ring)

    def __sub__(self, other):
        other = self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)], self.ring)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.coerce(other)
            return Poly([a * c for a in self.coeffs], self.ring)
        other = self._match(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.ring.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        result = Poly([self.ring.one], self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _match(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([self.ring.coerce(other)], self.ring)

    def divmod(self, other):
        """Quotient and remainder; needs a field ring or a monic divisor."""
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        if not self.ring.is_field and not other.is_monic():
            raise DomainError("non-monic division over a non-field ring")
        lead_inv = None
        rem = list(self.coeffs)
        q = [self.ring.zero] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        for i in range(len(rem) - 1 - d, -1, -1):
            top = rem[i + d]
            if top == self.ring.zero:
                continue
            if other.is_monic():
                c = top
            else:
                if lead_inv is None:
                    lead_inv = self.ring.one / other.leading
                c = top * lead_inv
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - c * b
        return Poly(q, self.ring), Poly(rem[:d], self.ring)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.ring.one / self.leading
        return Poly([c * inv for c in self.coeffs], self.ring)

    def derivative(self):
        return Poly(
            [self.coeffs[i] * self.ring.coerce(i) for i in range(1, len(self.coeffs))],
            self.ring,
        )

    def __call__(self, x):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def gcd(self, other):
        """Monic gcd (field coefficients)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == self.ring.zero:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x" if c != self.ring.one else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != self.ring.one else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def _same_ring(c, ring) -> bool:
    # cheap duck test: already-coerced values pass through untouched
    try:
        return type(c) is type(ring.zero) or (
            hasattr(c, "field") and getattr(ring, "is_nf", False) and c.field is ring
        )
    except Exception:
        return False


def resultant(f: Poly, g: Poly):
    """res(f, g) over a field, by fraction-free elimination of Sylvester's matrix."""
    if f.is_zero() or g.is_zero():
        return f.ring.zero
    n, m = f.degree, g.degree
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    ring = f.ring
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([ring.zero] * i + fc + [ring.zero] * (size - i - n - 1))
    for i in range(n):
        rows.append([ring.zero] * i + gc + [ring.zero] * (size - i - m - 1))
    # Gaussian elimination determinant (exact over the field)
    det = ring.one
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col] != ring.zero:
                piv = r
                break
        if piv is None:
            return ring.zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = ring.one / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] == ring.zero:
                continue
            factor = rows[r][col] * inv
            rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(size)]
    return det


def discriminant(f: Poly):
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    if f.is_zero() or f.degree < 1:
        raise DomainError("discriminant needs degree >= 1")
    n = f.degree
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f.leading
