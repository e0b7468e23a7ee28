"""Acceptance criteria, one test per criterion, exact tolerances throughout.

Where the source text of the verified example carries a transcription defect
(established twice over in the decisions record: the printed charpoly
coefficient, its discriminant, the irregular index and its derived
exponents), the criterion asserts the computed truth AND the precise
relationship to the printed value, so drift in either direction fails.
"""

import math
import time
from fractions import Fraction

import pytest

from maasslift.exactnum import (
    Poly,
    factorize,
    frac_valuation,
    is_probable_prime,
    poly_discriminant,
    roots_mod_p,
)
from maasslift.level1 import hecke_charpoly, newform
from maasslift.lfun import (
    DirichletChar,
    bernoulli_mod_p,
    dirichlet_l_neg,
    gen_bernoulli,
    irregular_scan,
    l_alg,
    l_alg_products,
)

P = 516223
X = Poly.x()

TRUE_G = (
    X**4
    + 68476320 * X**3
    - 19584715019010048 * X**2
    - 1083312724663489297121280 * X
    + 39446133467662904714689328971776
)
PRINTED_G = (
    X**4
    + 68476320 * X**3
    - 19584715019010048 * X**2
    - 10833127246634489297121280 * X
    + 39446133467662904714689328971776
)
PRINTED_DISC_FACTORS = {
    2: 48,
    3: 3,
    5: 6,
    11: 1,
    59: 1,
    15909926723: 1,
    4581597403: 1,
    61912455248726091228769884731066259290896074682396020673553: 1,
}
TRUE_DISC_FACTORS = {
    2: 88,
    3: 22,
    5: 6,
    7: 4,
    13: 2,
    71: 1,
    4261: 2,
    14347: 1,
    781817: 1,
    37818209430804413109449276960701: 1,
}


def _report(num, text):
    print(f"[criterion {num:>2}] PASS: {text}")


def test_criterion_01_charpoly_t2_weight54():
    t0 = time.time()
    g = hecke_charpoly(54, 2)
    assert g == TRUE_G
    # relationship to the printed polynomial: identical except the degree-1
    # coefficient, where the printed string carries one duplicated digit
    assert [g[i] for i in (0, 2, 3, 4)] == [PRINTED_G[i] for i in (0, 2, 3, 4)]
    assert g[1] != PRINTED_G[1]
    assert str(-PRINTED_G[1]) == "10833127246634489297121280"
    assert str(-g[1]) == "1083312724663489297121280"
    elapsed = time.time() - t0
    assert elapsed < 120
    _report(1, f"charpoly(T(2), S_54) computed exactly in {elapsed:.2f}s "
               "(printed source value corrected in one digit; see ledger)")


def test_criterion_02_discriminant_factorization():
    # the printed pair (polynomial, factored discriminant) is internally
    # consistent: our factorizer reproduces the full printed list
    printed_disc = poly_discriminant(PRINTED_G)
    expect = -math.prod(q**e for q, e in PRINTED_DISC_FACTORS.items())
    assert printed_disc == expect
    fac = factorize(printed_disc.numerator)
    assert fac == PRINTED_DISC_FACTORS
    assert is_probable_prime(max(PRINTED_DISC_FACTORS))
    # the true charpoly's discriminant: p-free (the load-bearing fact) and
    # fully factored
    true_disc = poly_discriminant(TRUE_G)
    assert frac_valuation(true_disc, P) == 0
    assert factorize(true_disc.numerator) == TRUE_DISC_FACTORS
    assert true_disc == math.prod(q**e for q, e in TRUE_DISC_FACTORS.items())
    _report(2, "disc factorizations reproduce (printed pair verbatim incl. "
               "2^48 3^3 5^6 11 59 and the 59-digit probable prime; true "
               "charpoly's disc is coprime to p)")


def test_criterion_03_roots_mod_p():
    assert roots_mod_p(TRUE_G, P) == {287487, 85284}
    # the printed polynomial has no roots mod p at all
    assert roots_mod_p(PRINTED_G, P) == set()
    _report(3, "roots of g mod 516223 = {287487, 85284} exactly")


def test_criterion_04_trace_check():
    t0 = time.time()
    assert (pow(2, 32486, P) + pow(2, 483789, P)) % P == 258573
    assert (pow(2, 32486, P) + pow(2, 483789, P)) % P != 258574
    # corrected exponent chain from the true irregular index
    assert (pow(2, 32436, P) + pow(2, 483839, P)) % P == 78993
    elapsed = time.time() - t0
    assert elapsed < 0.1
    _report(4, f"trace arithmetic verified in {elapsed*1000:.1f}ms "
               "(printed identity true as stated; corrected chain = 78993)")


def test_criterion_05_bernoulli_scan():
    t0 = time.time()
    scan = irregular_scan(P)
    assert scan == [451404]
    assert bernoulli_mod_p(451404, P).residue == 0
    # the printed index is not irregular (independent power-sum verification
    # recorded in the ledger); freeze its actual residue
    assert bernoulli_mod_p(451304, P).residue == 425000
    _report(5, f"irregular_scan(516223) = [451404] in {time.time()-t0:.1f}s "
               "(printed index 451304 has B = 425000 != 0; see ledger)")


def test_criterion_06_sk_eigenvalue_identity(phi10, phi12, f18, f22):
    from maasslift.jacobi import ez_to_kohnen
    from maasslift.lifts import maass_lift
    from maasslift.siegel import eigenvalue_extract, hecke_t2

    t0 = time.time()
    for phi, k, f in ((phi10, 10, f18), (phi12, 12, f22)):
        g = ez_to_kohnen(phi)
        for ell in (2, 3):
            lift = maass_lift(g, k, ell * ell * 6)
            lam = eigenvalue_extract(lift, hecke_t2(lift, ell, 6))
            assert lam == ell ** (k - 1) + ell ** (k - 2) + f.a(ell).rational_value()
    elapsed = time.time() - t0
    assert elapsed < 60
    _report(6, f"T(ell) eigenvalue = ell^(k-1)+ell^(k-2)+a_f(ell) for "
               f"k in {{10,12}}, ell in {{2,3}} at bound 6 ({elapsed:.1f}s)")


def test_criterion_07_maass_closure_and_mutation(phi10, phi12):
    from maasslift.jacobi import ez_to_kohnen
    from maasslift.lifts import maass_lift
    from maasslift.siegel import maass_check

    for phi, k in ((phi10, 10), (phi12, 12)):
        lift = maass_lift(ez_to_kohnen(phi), k, 6)
        assert maass_check(lift) == []
        mutated = lift.perturb(2, 2, 2, 1)
        bad = [t for t in maass_check(mutated) if math.gcd(math.gcd(t[0], t[1]), t[2]) > 1]
        assert bad == [(2, 2, 2)]
    _report(7, "Maass relation closes on the k=10,12 lifts at bound 6; "
               "perturbing A(2,2,2) is flagged exactly there")


def test_criterion_08_shimura_lift(phi10, f18):
    from maasslift.jacobi import ez_to_kohnen, jacobi_cusp_basis
    from maasslift.lifts import shimura_lift

    lift = shimura_lift(ez_to_kohnen(phi10), -3, 10, 20)
    assert all(lift.a(n) == f18.a(n).rational_value() for n in range(1, 20))
    for two_k_2, k in ((18, 10), (22, 12), (26, 14)):
        basis = jacobi_cusp_basis(k, 3 * 14 * 14)
        g = ez_to_kohnen(basis[0])
        lifted = shimura_lift(g, -3, k, 14)
        f = newform(two_k_2)
        for ell in (2, 3):
            t = lifted.hecke_t(ell)
            af = f.a(ell).rational_value()
            assert all(t.a(n) == af * lifted.a(n) for n in range(1, 14 // ell))
    _report(8, "Shimura lift of ez(phi10) at D=-3 equals the weight-18 "
               "newform; Hecke equivariance at weights 18, 22, 26 "
               "(weight 20 needs odd k, weight 24 has dim 2; see ledger)")


def test_criterion_09_standard_factorization_identity():
    from maasslift.lifts import (
        dirichlet_euler_factor,
        elliptic_euler_factor,
        standard_euler_factor,
    )

    chi3 = DirichletChar.quadratic(-3)
    for k, w in ((10, 18), (28, 54)):
        f = newform(w)
        ring = f.field
        for ell in (2, 5):
            a = f.a(ell)
            chiv = chi3(ell)
            for cv in {chiv, 1, -1, 0}:
                lhs = standard_euler_factor(a, k, ell, cv).poly
                rhs = (
                    dirichlet_euler_factor(ell, cv, -2, ring=ring).poly
                    * elliptic_euler_factor(a, w, ell, cv, k - 3).poly
                    * elliptic_euler_factor(a, w, ell, cv, k - 4).poly
                )
                assert lhs == rhs
    _report(9, "standard zeta factor = Dirichlet x two shifted elliptic "
               "factors, exact degree-5 identities (k in {10,28}, ell in {2,5})")


def test_criterion_10_lvalue_ledger(f54):
    t0 = time.time()
    chi3 = DirichletChar.quadratic(-3)
    assert l_alg_products(54, 28, DirichletChar.trivial(1), P, f54)["valuation"] >= 1
    for j in (1, 2, 27):
        assert l_alg_products(54, j, chi3, P, f54)["valuation"] == 0
    # exact equality (both sides are the exact zero forced by parity)
    b26 = gen_bernoulli(26, chi3)
    lit = dirichlet_l_neg(-25, chi3)
    assert lit == -b26 / 26 == 0
    # even-parity value carrying the p-indivisibility content
    even = dirichlet_l_neg(-25, DirichletChar.trivial(3))
    assert even == (1 - Fraction(3) ** 25) * dirichlet_l_neg(-25)
    assert frac_valuation(even, P) == 0
    # central-point vanishing with functional equation sign -1
    assert l_alg(f54, 27).is_zero()
    elapsed = time.time() - t0
    assert elapsed < 1800
    _report(10, f"weight-54 L-ledger in {elapsed:.1f}s: v_p(L_alg(28)) >= 1; "
                "v_p = 0 at (1, chi), (2, chi), (27, chi_D); "
                "L^(3)(-25,chi) = -B_26,chi/26 exactly (parity zero; "
                "indivisibility carried by the even-parity value); "
                "L_alg(27) = 0 exactly")


def test_criterion_11_property_suite():
    # randomized invariants, >= 100 cases each where randomization applies;
    # module test files run the full spread, this aggregates one pass here
    import random

    from maasslift.exactnum import NFElement, NumberField, kronecker, nf_reduce_deg1
    from maasslift.siegel import reduce_form

    rng = random.Random(99)
    for _ in range(120):
        a, m, n = rng.randrange(-99, 100), rng.randrange(1, 40), rng.randrange(1, 40)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)
    gens = [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (1, 0)), ((1, 0), (0, -1))]
    for _ in range(120):
        nn, mm = rng.randrange(8), rng.randrange(8)
        rmax = math.isqrt(4 * nn * mm)
        rr = rng.randrange(-rmax, rmax + 1) if rmax else 0
        key = reduce_form(nn, rr, mm)
        tri = (nn, rr, mm)
        for _ in range(5):
            (aa, bb), (cc, dd) = rng.choice(gens)
            tri = (
                tri[0] * aa * aa + tri[1] * aa * cc + tri[2] * cc * cc,
                2 * tri[0] * aa * bb + tri[1] * (aa * dd + bb * cc) + 2 * tri[2] * cc * dd,
                tri[0] * bb * bb + tri[1] * bb * dd + tri[2] * dd * dd,
            )
        assert reduce_form(*tri) == key
    K = NumberField(TRUE_G)
    root = sorted(roots_mod_p(TRUE_G, P))[0]
    for _ in range(100):
        x = NFElement(K, [Fraction(rng.randrange(-9, 10)) for _ in range(4)])
        y = NFElement(K, [Fraction(rng.randrange(-9, 10)) for _ in range(4)])
        assert nf_reduce_deg1(x * y, P, root) == nf_reduce_deg1(x, P, root) * nf_reduce_deg1(y, P, root)
    _report(11, "randomized property battery (>= 100 cases per property; "
                "full spread in the module test files)")


def test_criterion_12_verify_paper_example():
    from maasslift import records
    from maasslift.pipeline import verify_paper_example

    rep = verify_paper_example()
    assert rep.all_pass()
    assert rep.hypotheses_satisfied
    assert rep.m is not None and rep.m >= 1
    assert rep.n == 0
    rep2 = verify_paper_example()
    r1 = records.FormRecord("report", 54, 0, rep.to_payload()).to_json()
    r2 = records.FormRecord("report", 54, 0, rep2.to_payload()).to_json()
    assert r1 == r2
    names = {c["name"] for c in rep.checks}
    assert any("irreducibility" in n for n in names)
    assert any("congruence" in n for n in names)
    assert any("trace" in n for n in names)
    _report(12, f"verify-paper-example: all-pass deterministic report with "
                f"m = {rep.m} >= 1, n = {rep.n}")
