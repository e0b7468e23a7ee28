"""Dirichlet characters with an explicit value table.

Quadratic characters (the only twists the L-value pipeline consumes) store
plain integers -1, 0, 1; the table may instead hold elements of any exact
coefficient ring (e.g. a cyclotomic NumberField), and the Bernoulli machinery
stays generic over that ring.
"""

import math

from ..errors import DomainError
from ..exactnum import is_fundamental_discriminant, kronecker


class DirichletChar:
    """A Dirichlet character mod N given by its value table on 0..N-1."""

    __slots__ = ("modulus", "values")

    def __init__(self, modulus: int, values):
        if modulus < 1 or len(values) != modulus:
            raise DomainError("value table must list all residues mod N")
        for a, v in enumerate(values):
            if modulus > 1 and math.gcd(a, modulus) != 1:
                if v != 0 and v != 0 * v:
                    raise DomainError("character must vanish off the units")
        if values[1 % modulus] != 1 and modulus > 1:
            raise DomainError("character must send 1 to 1")
        self.modulus = modulus
        self.values = tuple(values)

    @classmethod
    def trivial(cls, modulus: int = 1):
        if modulus == 1:
            return cls(1, (1,))
        vals = [1 if math.gcd(a, modulus) == 1 else 0 for a in range(modulus)]
        return cls(modulus, vals)

    @classmethod
    def quadratic(cls, d: int):
        """chi_d = (d/.), for d a fundamental discriminant (conductor |d|)."""
        if not is_fundamental_discriminant(d):
            raise DomainError(f"{d} is not a fundamental discriminant")
        n = abs(d) if d != 1 else 1
        return cls(n, tuple(kronecker(d, a) for a in range(n)))

    def __call__(self, n: int):
        return self.values[n % self.modulus]

    def is_odd(self) -> bool:
        return self(-1) == -1

    def is_trivial(self) -> bool:
        return all(v == 1 for a, v in enumerate(self.values) if math.gcd(a, self.modulus) == 1)

    def __eq__(self, other):
        return (
            isinstance(other, DirichletChar)
            and self.modulus == other.modulus
            and self.values == other.values
        )

    def __hash__(self):
        # quadratic tables are hashable ints; ring-valued tables may not be
        return hash((self.modulus, tuple(str(v) for v in self.values)))

    def __repr__(self):
        if self.modulus <= 12:
            return f"DirichletChar({self.modulus}, {list(self.values)})"
        return f"DirichletChar(mod {self.modulus})"
