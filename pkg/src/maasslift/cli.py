"""Command-line interface emitting interchange records.

Every subcommand prints one FormRecord as JSON on stdout.  Failures map to
exit codes: 1 for a failed verification, 2 for domain errors, 3 for precision
errors, with a machine-readable error record on stderr.
"""

import argparse
import json
import sys

from . import records
from .errors import CheckFailure, DomainError, PrecisionError


def _emit(record: records.FormRecord, out: str = None) -> None:
    text = record.to_json()
    if out:
        with open(out, "w") as handle:
            handle.write(text + "\n")
    sys.stdout.write(text + "\n")


def _enc(x):
    return records.encode_number(x)


def cmd_basis(args) -> int:
    from .level1 import miller_basis

    basis = miller_basis(args.weight, args.prec)
    payload = {"forms": [[_enc(c) for c in b.coeffs] for b in basis]}
    _emit(
        records.FormRecord(
            "basis",
            args.weight,
            args.prec,
            payload,
            {"op": "miller-basis", "weight": args.weight, "prec": args.prec},
        ),
        args.out,
    )
    return 0


def cmd_hecke(args) -> int:
    from .exactnum import charpoly
    from .level1 import hecke_matrix

    mat = hecke_matrix(args.weight, args.ell)
    cp = charpoly(mat)
    payload = {
        "rows": [[_enc(x) for x in row] for row in mat],
        "charpoly": [_enc(c) for c in cp.coeffs],
    }
    _emit(
        records.FormRecord(
            "matrix",
            args.weight,
            len(mat),
            payload,
            {"op": "hecke", "weight": args.weight, "ell": args.ell},
        ),
        args.out,
    )
    return 0


def cmd_newform(args) -> int:
    from .level1 import newform

    f = newform(args.weight, prec=args.prec)
    payload = {
        "field": [_enc(c) for c in f.field.defining.coeffs],
        "coefficients": [[_enc(c) for c in a.vec] for a in f.expansion.coeffs],
    }
    _emit(
        records.FormRecord(
            "qexp",
            args.weight,
            f.prec,
            payload,
            {"op": "newform", "weight": args.weight, "prec": args.prec},
        ),
        args.out,
    )
    return 0


def cmd_jacobi(args) -> int:
    from .jacobi import jacobi_cusp_basis

    basis = jacobi_cusp_basis(args.weight, args.dmax)
    payload = {
        "forms": [{str(n): _enc(c) for n, c in enumerate(phi.coeffs) if c} for phi in basis],
    }
    if args.weight % 2:
        payload["note"] = "odd-weight index-1 Jacobi forms vanish identically"
    _emit(
        records.FormRecord(
            "jacobi",
            args.weight,
            args.dmax,
            payload,
            {"op": "jacobi-basis", "weight": args.weight, "d_max": args.dmax},
        ),
        args.out,
    )
    return 0


def cmd_kohnen(args) -> int:
    from .jacobi import ez_to_kohnen, jacobi_cusp_basis, plus_space_check

    basis = [ez_to_kohnen(phi) for phi in jacobi_cusp_basis(args.weight, args.dmax)]
    payload = {
        "forms": [{str(n): _enc(c) for n, c in enumerate(g.coeffs) if c} for g in basis],
        "plus_space_violations": [plus_space_check(g) for g in basis],
    }
    weight = f"{2 * args.weight - 1}/2"
    _emit(
        records.FormRecord(
            "kohnen",
            weight,
            args.dmax,
            payload,
            {"op": "kohnen-basis", "weight": args.weight, "d_max": args.dmax},
        ),
        args.out,
    )
    return 0


def cmd_shimura(args) -> int:
    from .jacobi import ez_to_kohnen, jacobi_cusp_basis
    from .lifts import shimura_lift

    dmax = abs(args.disc) * (args.prec - 1) ** 2
    basis = jacobi_cusp_basis(args.weight, dmax)
    if len(basis) != 1:
        raise DomainError(
            f"shimura subcommand expects a one-dimensional space, dim = {len(basis)}"
        )
    lift = shimura_lift(ez_to_kohnen(basis[0]), args.disc, args.weight, args.prec)
    payload = {"coefficients": [_enc(c) for c in lift.coeffs]}
    _emit(
        records.FormRecord(
            "qexp",
            lift.weight,
            lift.prec,
            payload,
            {"op": "shimura", "weight": args.weight, "disc": args.disc, "prec": args.prec},
        ),
        args.out,
    )
    return 0


def cmd_sk_lift(args) -> int:
    from .jacobi import ez_to_kohnen, jacobi_cusp_basis
    from .lifts import maass_lift
    from .siegel import maass_check

    dmax = 4 * args.bound * args.bound
    basis = jacobi_cusp_basis(args.weight, dmax)
    if len(basis) != 1:
        raise DomainError(
            f"sk-lift subcommand expects a one-dimensional space, dim = {len(basis)}"
        )
    lift = maass_lift(ez_to_kohnen(basis[0]), args.weight, args.bound)
    violations = maass_check(lift)
    payload = {
        "coefficients": {f"{n},{r},{m}": _enc(v) for (n, r, m), v in sorted(lift.coeffs.items())},
        "maass_check_violations": [list(t) for t in violations],
    }
    _emit(
        records.FormRecord(
            "siegel",
            args.weight,
            args.bound,
            payload,
            {"op": "sk-lift", "weight": args.weight, "bound": args.bound},
        ),
        args.out,
    )
    return 0 if not violations else 1


def cmd_siegel_hecke(args) -> int:
    from .jacobi import ez_to_kohnen, jacobi_cusp_basis
    from .level1 import newform
    from .lifts import maass_lift
    from .siegel import eigenvalue_extract, hecke_t2

    k = args.weight
    bound = args.bound
    dmax = 4 * (args.ell * args.ell * bound) ** 2
    basis = jacobi_cusp_basis(k, dmax)
    if len(basis) != 1:
        raise DomainError("siegel-hecke expects a one-dimensional space")
    lift = maass_lift(ez_to_kohnen(basis[0]), k, args.ell * args.ell * bound)
    lam = eigenvalue_extract(lift, hecke_t2(lift, args.ell, bound))
    f = newform(2 * k - 2)
    expect = args.ell ** (k - 1) + args.ell ** (k - 2) + f.a(args.ell).rational_value()
    payload = {
        "ell": args.ell,
        "eigenvalue": _enc(lam),
        "expected": _enc(expect),
        "matches_identity": lam == expect,
    }
    _emit(
        records.FormRecord(
            "report",
            k,
            bound,
            payload,
            {"op": "siegel-hecke", "weight": k, "ell": args.ell, "bound": bound},
        ),
        args.out,
    )
    return 0 if lam == expect else 1


def cmd_bernoulli(args) -> int:
    from .lfun import bernoulli_mod_p, irregular_scan

    if args.scan:
        idx = irregular_scan(args.mod_p)
        payload = {"irregular_indices": idx}
        prec = args.mod_p - 3
    else:
        if args.index is None:
            raise DomainError("need --index N or --scan")
        payload = {
            "index": args.index,
            "residue": bernoulli_mod_p(args.index, args.mod_p).residue,
        }
        prec = args.index
    _emit(
        records.FormRecord(
            "report",
            0,
            prec,
            payload,
            {"op": "bernoulli-mod-p", "p": args.mod_p, "index": args.index, "scan": args.scan},
        ),
        args.out,
    )
    return 0


def cmd_l_alg(args) -> int:
    from .lfun import DirichletChar, l_alg_products

    chi = DirichletChar.quadratic(args.twist) if args.twist else DirichletChar.trivial(1)
    result = l_alg_products(args.weight, args.point, chi, args.p)
    payload = {
        "weight": args.weight,
        "point": args.point,
        "twist": args.twist or 1,
        "p": args.p,
        "norm": _enc(result["norm"]),
        "valuation": result["valuation"] if result["valuation"] is not None else "infinite",
    }
    _emit(
        records.FormRecord(
            "report",
            args.weight,
            args.point,
            payload,
            {"op": "l-alg", "weight": args.weight, "point": args.point, "twist": args.twist, "p": args.p},
        ),
        args.out,
    )
    return 0


def cmd_verify(args) -> int:
    from .pipeline import verify_paper_example

    report = verify_paper_example(p=args.p, w=args.weight)
    payload = report.to_payload()
    _emit(
        records.FormRecord(
            "report",
            args.weight,
            0,
            payload,
            {"op": "verify-paper-example", "p": args.p, "weight": args.weight},
        ),
        args.out,
    )
    if not (report.all_pass() and report.hypotheses_satisfied):
        raise CheckFailure("verification produced failing checks")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maasslift",
        description="Exact Saito-Kurokawa correspondence toolkit: q-expansions, "
        "Jacobi/Siegel forms, critical L-values, Bernoulli scans mod p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=fn)
        p.add_argument("--out", help="also write the record to this file")
        return p

    p = add("basis", cmd_basis, help="Victor Miller basis of S_w")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--prec", type=int, required=True)

    p = add("hecke", cmd_hecke, help="Hecke matrix T(ell) on S_w with charpoly")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)

    p = add("newform", cmd_newform, help="eigenform over its Hecke eigenfield")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--prec", type=int, default=30)

    p = add("jacobi", cmd_jacobi, help="basis of index-1 Jacobi cusp forms")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--dmax", type=int, default=400)

    p = add("kohnen", cmd_kohnen, help="plus-space basis via Eichler-Zagier")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--dmax", type=int, default=400)

    p = add("shimura", cmd_shimura, help="Shimura lift of the plus-space generator")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--prec", type=int, default=12)

    p = add("sk-lift", cmd_sk_lift, help="Saito-Kurokawa lift with Maass check")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--bound", type=int, default=6)

    p = add("siegel-hecke", cmd_siegel_hecke, help="genus-2 T(ell) eigenvalue report")
    p.add_argument("--weight", type=int, default=10)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--bound", type=int, default=2)

    p = add("bernoulli", cmd_bernoulli, help="Bernoulli numbers mod p")
    p.add_argument("--mod-p", dest="mod_p", type=int, required=True)
    p.add_argument("--index", type=int)
    p.add_argument("--scan", action="store_true")

    p = add("l-alg", cmd_l_alg, help="algebraic L-value norm and p-valuation")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--point", type=int, required=True)
    p.add_argument("--twist", type=int, default=0)
    p.add_argument("--p", type=int, default=516223)

    p = add("verify-paper-example", cmd_verify, help="full divisibility report")
    p.add_argument("--p", type=int, default=516223)
    p.add_argument("--weight", type=int, default=54)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CheckFailure as exc:
        _error_record("check-failure", exc)
        return 1
    except PrecisionError as exc:
        _error_record("precision-error", exc)
        return 3
    except DomainError as exc:
        _error_record("domain-error", exc)
        return 2


def _error_record(kind: str, exc: Exception) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")


if __name__ == "__main__":
    sys.exit(main())
