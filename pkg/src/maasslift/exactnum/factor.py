"""F_p[x] arithmetic, root finding, and factorization of integer polynomials.

F_p[x] elements are plain int lists (lowest degree first, reduced mod p,
no trailing zeros).  On top of that: Cantor-Zassenhaus with a deterministic
splitting sequence, Hensel lifting, and a small Zassenhaus factorizer used
for irreducibility certificates over Q.
"""

import math
from fractions import Fraction

from ..errors import DomainError
from .integers import next_prime
from .poly import Poly, QQ

# ---------------------------------------------------------------- F_p[x] core


def fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_add(a, b, p):
    n = max(len(a), len(b))
    return fp_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    return fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([v % p for v in out])


def fp_scale(a, c, p):
    c %= p
    return fp_trim([x * c % p for x in a])


def fp_divmod(a, b, p):
    if not b:
        raise DomainError("division by zero polynomial")
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    q = [0] * max(0, len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return fp_trim(q), fp_trim(a[:db])


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_mod(a, b, p)
    if a:
        a = fp_scale(a, pow(a[-1], p - 2, p), p)
    return a


def fp_monic(a, p):
    if not a:
        return a
    return fp_scale(a, pow(a[-1], p - 2, p), p)


def fp_powmod(base, e: int, mod, p):
    result = [1]
    base = fp_mod(base, mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), mod, p)
        base = fp_mod(fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def fp_deriv(a, p):
    return fp_trim([a[i] * i % p for i in range(1, len(a))])


def fp_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


# ------------------------------------------------------- factorization mod p


def fp_squarefree_decomposition(f, p):
    """[(g, multiplicity)] with f = prod g^mult, each g squarefree monic."""
    f = fp_monic(f, p)
    out = []
    if len(f) <= 1:
        return out

    def _sqf(f, mult):
        d = fp_deriv(f, p)
        if not d:
            # f = g(x^p) = g(x)^p over F_p
            g = fp_trim([f[i] for i in range(0, len(f), p)])
            _sqf(g, mult * p)
            return
        w = fp_gcd(f, d, p)
        v = fp_divmod(f, w, p)[0]
        k = 0
        while len(v) > 1:
            k += 1
            h = fp_gcd(v, w, p)
            piece = fp_divmod(v, h, p)[0]
            if len(piece) > 1:
                out.append((piece, mult * k))
            v = h
            w = fp_divmod(w, h, p)[0]
        if len(w) > 1:
            _sqf(w, mult)

    _sqf(f, 1)
    return out


def _fp_distinct_degree(f, p):
    """[(product of irreducibles of degree d, d)] for squarefree monic f."""
    out = []
    h = [0, 1]  # x
    rest = list(f)
    d = 0
    while len(rest) - 1 > 2 * d:
        d += 1
        h = fp_powmod(h, p, rest, p)
        g = fp_gcd(fp_sub(h, [0, 1], p), rest, p)
        if len(g) > 1:
            out.append((g, d))
            rest = fp_divmod(rest, g, p)[0]
            h = fp_mod(h, rest, p)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _candidate_polys(deg_bound, p):
    """Deterministic enumeration of nonconstant polynomials for CZ splits.

    Encodes t = 1, 2, ... in base p; small t give the shifts x + t, larger t
    sweep through every higher-degree polynomial, so the splitter terminates.
    """
    t = 1
    while True:
        coeffs = []
        v = t
        while v:
            coeffs.append(v % p)
            v //= p
        if len(coeffs) == 1:
            coeffs = [coeffs[0], 1]
        yield fp_trim(coeffs)
        t += 1


def _fp_equal_degree(f, d, p):
    """Split a monic squarefree product of degree-d irreducibles (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    if p == 2:
        raise DomainError("equal-degree splitting implemented for odd p")
    exponent = (p**d - 1) // 2
    for u in _candidate_polys(max(2, 2 * d), p):
        w = fp_powmod(u, exponent, f, p)
        g = fp_gcd(fp_sub(w, [1], p), f, p)
        if 0 < len(g) - 1 < n:
            return _fp_equal_degree(g, d, p) + _fp_equal_degree(fp_divmod(f, g, p)[0], d, p)
    raise RuntimeError("unreachable: splitting sequence exhausted")


def fp_factor(f, p):
    """Monic irreducible factors with multiplicity: [(poly, mult)], sorted."""
    out = []
    for g, mult in fp_squarefree_decomposition(f, p):
        for h, d in _fp_distinct_degree(g, p):
            for irr in _fp_equal_degree(h, d, p):
                out.append((irr, mult))
    return sorted(out, key=lambda t: (len(t[0]), t[0]))


def fp_roots(f, p):
    """All roots of f in F_p (f nonzero, any degree), as a sorted list."""
    if not f:
        raise DomainError("zero polynomial")
    if p < 4096:
        return sorted(x for x in range(p) if fp_eval(f, x, p) == 0)
    f = fp_monic(f, p)
    h = fp_powmod([0, 1], p, f, p)
    g = fp_gcd(fp_sub(h, [0, 1], p), f, p)
    roots = []

    def _split(g):
        if len(g) - 1 == 0:
            return
        if len(g) - 1 == 1:
            roots.append((-g[0] * pow(g[1], p - 2, p)) % p)
            return
        a = 0
        while True:
            w = fp_powmod([a, 1], (p - 1) // 2, g, p)
            d = fp_gcd(fp_sub(w, [1], p), g, p)
            if 0 < len(d) - 1 < len(g) - 1:
                _split(d)
                _split(fp_divmod(g, d, p)[0])
                return
            a += 1

    _split(g)
    return sorted(roots)


# ------------------------------------------------ integer polynomial helpers


def poly_to_int_primitive(f: Poly):
    """(content, integer coefficient list) with f = content * primitive part."""
    if f.is_zero():
        return Fraction(0), []
    den = math.lcm(*[c.denominator for c in f.coeffs])
    ints = [int(c * den) for c in f.coeffs]
    g = math.gcd(*[abs(v) for v in ints])
    sign = 1 if ints[-1] > 0 else -1
    g *= sign
    return Fraction(g, den), [v // g for v in ints]


def _int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _hensel_pair(f, g, h, s, t, p, target):
    """Lift f = g*h from mod p to mod p^k >= target (f, g, h monic-compatible)."""
    m = p
    while m < target:
        m2 = m * m

        def red(poly):
            return [c % m2 for c in poly]

        e = [a - b for a, b in zip_pad(f, _int_poly_mul(g, h))]
        e = red(e)
        q, r = _int_divmod_mod(_int_poly_mul(s, e), h, m2)
        g_new = red([a + b for a, b in zip_pad(g, [x + y for x, y in zip_pad(_int_poly_mul(t, e), _int_poly_mul(q, g))])])
        h_new = red([a + b for a, b in zip_pad(h, r)])
        b = [a - c for a, c in zip_pad([x + y for x, y in zip_pad(_int_poly_mul(s, g_new), _int_poly_mul(t, h_new))], [1])]
        b = red(b)
        c, d = _int_divmod_mod(_int_poly_mul(s, b), h_new, m2)
        s_new = red([a - bb for a, bb in zip_pad(s, d)])
        t_new = red([a - bb for a, bb in zip_pad(t, [x + y for x, y in zip_pad(_int_poly_mul(t, b), _int_poly_mul(c, g_new))])])
        g, h, s, t = trim_int(g_new), trim_int(h_new), trim_int(s_new), trim_int(t_new)
        m = m2
    return g, h, m


def zip_pad(a, b):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)) for i in range(n)]


def trim_int(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_divmod_mod(a, b, m):
    """divmod of integer polys with arithmetic mod m; b must be monic mod m."""
    a = [c % m for c in a]
    db = len(trim_int([c % m for c in b])) - 1
    bb = [c % m for c in b]
    q = [0] * max(0, len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] % m
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * bb[j]) % m
    return trim_int(q), trim_int(a[:db])


def _hensel_multifactor(f_int, factors, p, target):
    """Lift a pairwise-coprime monic factorization of monic f mod p to mod p^k."""
    if len(factors) == 1:
        return [[c % target_power(p, target) for c in f_int]]
    mid = len(factors) // 2
    g = [1]
    for fac in factors[:mid]:
        g = [c % p for c in _int_poly_mul(g, fac)]
    h = [1]
    for fac in factors[mid:]:
        h = [c % p for c in _int_poly_mul(h, fac)]
    s, t = _fp_bezout(g, h, p)
    g_lift, h_lift, _ = _hensel_pair(f_int, g, h, s, t, p, target)
    return _hensel_multifactor(g_lift, factors[:mid], p, target) + _hensel_multifactor(
        h_lift, factors[mid:], p, target
    )


def target_power(p, target):
    m = p
    while m < target:
        m *= m
    return m


def _fp_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(s0, fp_mul(q, s1, p), p)
        t0, t1 = t1, fp_sub(t0, fp_mul(q, t1, p), p)
    inv = pow(r0[0], p - 2, p) if len(r0) == 1 else None
    if inv is None:
        raise DomainError("factors not coprime mod p")
    return fp_scale(s0, inv, p), fp_scale(t0, inv, p)


def _mignotte_bound(f_int):
    n = len(f_int) - 1
    norm = math.isqrt(sum(c * c for c in f_int)) + 1
    return (2**n) * norm * abs(f_int[-1])


def factor_squarefree_monic_int(f_int):
    """Irreducible monic integer factors of a squarefree monic integer poly."""
    n = len(f_int) - 1
    if n <= 1:
        return [f_int]
    p = 3
    while True:
        p = next_prime(p)
        if f_int[-1] % p == 0:
            continue
        fp = [c % p for c in f_int]
        if len(fp_gcd(fp, fp_deriv(fp, p), p)) == 1:
            break
    local = [g for g, _ in fp_factor(fp, p)]
    if len(local) == 1:
        return [f_int]
    bound = 2 * _mignotte_bound(f_int) + 1
    lifted = _hensel_multifactor([c % target_power(p, bound) for c in f_int], local, p, bound)
    modulus = target_power(p, bound)

    def sym(c):
        c %= modulus
        return c - modulus if c > modulus // 2 else c

    remaining = list(range(len(lifted)))
    f_cur = list(f_int)
    out = []
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found:
            found = False
            for subset in _subsets(remaining, size):
                prod = [1]
                for idx in subset:
                    prod = [c % modulus for c in _int_poly_mul(prod, lifted[idx])]
                cand = [sym(c) for c in prod]
                q, ok = _int_poly_exact_div(f_cur, cand)
                if ok:
                    out.append(trim_int(cand))
                    f_cur = q
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
        size += 1
    if len(f_cur) > 1:
        out.append(trim_int(f_cur))
    return sorted(out, key=lambda t: (len(t), t))


def _subsets(items, size):
    import itertools

    return itertools.combinations(items, size)


def _int_poly_exact_div(a, b):
    """(a // b, True) when b divides a over Z, else (None, False)."""
    if len(b) > len(a) or not b or b[-1] == 0:
        return None, False
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        if a[i + db] % b[-1]:
            return None, False
        c = a[i + db] // b[-1]
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    if any(a[: db]):
        return None, False
    return q, True


def factor_rational_poly(f: Poly):
    """Irreducible monic factors over Q with multiplicity: [(Poly, mult)]."""
    if f.ring is not QQ:
        raise DomainError("rational factorization expects QQ coefficients")
    if f.degree < 1:
        raise DomainError("constant polynomial")
    out = {}
    work = f.monic()
    while work.degree > 0:
        sqf = (work // work.gcd(work.derivative())).monic()
        _, ints = poly_to_int_primitive(sqf)
        # primitive part of a monic rational poly can fail to be monic; rescale
        # through the variable substitution x -> x / lc to a monic integer poly
        if ints[-1] != 1:
            lc = ints[-1]
            scaled = [ints[i] * lc ** (len(ints) - 2 - i) for i in range(len(ints) - 1)] + [1]
            factors = factor_squarefree_monic_int(scaled)
            polys = [
                Poly([Fraction(c, lc ** (len(g) - 1 - i)) for i, c in enumerate(g)], QQ).monic()
                for g in factors
            ]
        else:
            polys = [Poly([Fraction(c) for c in g], QQ) for g in factor_squarefree_monic_int(ints)]
        for g in polys:
            mult = 0
            while True:
                q, r = work.divmod(g)
                if not r.is_zero():
                    break
                work = q
                mult += 1
            out[g] = out.get(g, 0) + mult
    return sorted(out.items(), key=lambda t: (t[0].degree, t[0].coeffs))


def is_irreducible_rational(f: Poly, certificate_primes: int = 40) -> bool:
    """Irreducibility over Q: mod-p certificates, degree-pattern sieve, then
    a full Zassenhaus factorization as the deterministic fallback."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    _, ints = poly_to_int_primitive(f)
    if ints[0] == 0:
        return False  # x divides
    n = len(ints) - 1
    possible = set(range(1, n))  # possible proper factor degrees
    p = 2
    tried = 0
    while tried < certificate_primes and possible:
        p = next_prime(p)
        if ints[-1] % p == 0:
            continue
        fp = [c % p for c in ints]
        if len(fp_gcd(fp, fp_deriv(fp, p), p)) != 1:
            continue
        tried += 1
        degs = []
        for g, mult in fp_factor(fp, p):
            degs.extend([len(g) - 1] * mult)
        if len(degs) == 1:
            return True
        sums = _subset_sums(degs)
        possible &= sums
    if not possible:
        return True
    factors = factor_rational_poly(f)
    return len(factors) == 1 and factors[0][1] == 1


def _subset_sums(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    total = sum(degs)
    return {s for s in sums if 0 < s < total}
