"""Command-line front end.

Every command reads and writes one structured-text (JSON) format: exact
rationals as "p/q" strings, group elements as integer labels, matrices as
{group, rows, cols, entries}.  Randomized suites record their seed and are
byte-reproducible (suppress the timestamp with --no-timestamp).

Exit codes: 0 success / all checks pass, 1 a mathematical relation or
invariant failed (a minimized witness is printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from grax import serde
from grax.algebra import CentralElement, GroupAlgebraMatrix, adjoint_star, nrd
from grax.cyclo import distribution_check, euler_family_check
from grax.detfun import det_free, ses_iso, tensor, two_term_nrd
from grax.exterior import (epsilon_from_matrix, epsilon_vanishing, pair,
                           rubin_membership, wedge_elements, wedge_homs)
from grax.fitting import (Budget, annihilation_check, delta_check,
                          fit_classical_oracle, fit_matrix, xi_approx)
from grax.groups import group_from_catalog
from grax.reps import irreps
from grax.suites import SUITES, run_suite

SCHEMA = "grax-report/1"
BUDGET_ENV = "GRAX_BUDGET"


class UsageError(Exception):
    pass


class MathFailure(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _load_json_arg(value):
    """Inline JSON, or @path to read a file."""
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(value)


def _budget_from(args) -> Budget:
    base = {}
    env = os.environ.get(BUDGET_ENV)
    if env:
        base.update(json.loads(env))
    if getattr(args, "budget", None):
        base.update(_load_json_arg(args.budget))
    return Budget.from_dict(base) if base else Budget()


def _group_of(args):
    params = tuple(args.params) if getattr(args, "params", None) else ()
    try:
        return group_from_catalog(args.group if hasattr(args, "group") else args.name,
                                  params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _matrix_of(args, G, attr="matrix"):
    obj = _load_json_arg(getattr(args, attr))
    return serde.json_to_gam(obj, G)


def _report(args, command, result, status="ok"):
    doc = {"schema": SCHEMA, "command": command, "status": status, "result": result}
    if getattr(args, "seed", None) is not None:
        doc["seed"] = args.seed
    if not args.no_timestamp:
        doc["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


# -- command handlers ---------------------------------------------------------

def cmd_group(args):
    G = _group_of(args)
    reps = irreps(G)
    return {"group": serde.group_to_json(G),
            "abelian": G.is_abelian(),
            "conjugacy_classes": [list(c) for c in G.conjugacy_classes],
            "irreducible_degrees": [r.degree for r in reps]}


def cmd_nrd(args):
    G = _group_of(args)
    M = _matrix_of(args, G)
    return serde.central_to_json(nrd(M))


def cmd_adjoint(args):
    G = _group_of(args)
    M = _matrix_of(args, G)
    star = adjoint_star(M)
    n = nrd(M)
    ident = GroupAlgebraMatrix.identity(G, M.rows)
    scaled = GroupAlgebraMatrix.from_entries(
        G, [[e * n.to_group_algebra() for e in row] for row in ident.entries])
    for P in (M * star, star * M):
        for r1, r2 in zip(P.entries, scaled.entries):
            for a, b in zip(r1, r2):
                if not (a - b).is_zero():
                    raise MathFailure("adjoint identity violated",
                                      {"matrix": serde.gam_to_json(M)})
    return {"adjoint": serde.gam_to_json(star), "nrd": serde.central_to_json(n)}


def cmd_xi(args):
    G = _group_of(args)
    lat = xi_approx(G, _budget_from(args))
    return serde.lattice_to_json(lat)


def cmd_fit(args):
    G = _group_of(args)
    M = _matrix_of(args, G)
    budget = _budget_from(args)
    lat = fit_matrix(M, args.a, budget)
    out = {"fitting": serde.lattice_to_json(lat)}
    if args.oracle_check:
        if not G.is_abelian():
            raise UsageError("--oracle-check applies to abelian groups only")
        oracle = fit_classical_oracle(M, args.a)
        out["oracle"] = serde.lattice_to_json(oracle)
        if lat != oracle:
            raise MathFailure("fitting lattice disagrees with the classical oracle", out)
    return out


def cmd_annihilate(args):
    G = _group_of(args)
    M = _matrix_of(args, G)
    if args.x == "order":
        x = CentralElement.from_rational(G, G.order)
    else:
        x = serde.json_to_central(_load_json_arg(args.x), G)
    verdict = delta_check(x, G, _budget_from(args))
    ok = annihilation_check(M, x)
    result = {"delta": serde.verdict_to_json(verdict), "annihilates": ok}
    if not ok:
        raise MathFailure("annihilation fails", result)
    return result


def cmd_wedge(args):
    G = _group_of(args)
    M = _matrix_of(args, G, "elements")
    return serde.exterior_to_json(wedge_elements(M))


def cmd_pair(args):
    G = _group_of(args)
    homs = _matrix_of(args, G, "homs")
    elements = _matrix_of(args, G, "elements")
    value = pair(wedge_homs(homs), wedge_elements(elements))
    if isinstance(value, CentralElement):
        return {"degree": 0, "value": serde.central_to_json(value)}
    return serde.exterior_to_json(value)


def cmd_epsilon(args):
    G = _group_of(args)
    M = _matrix_of(args, G)
    eps = epsilon_from_matrix(M)
    vanishing = epsilon_vanishing(M, eps)
    return {"epsilon": serde.exterior_to_json(eps),
            "nonzero_components": [nz for nz, _ in vanishing]}


def cmd_rubin(args):
    G = _group_of(args)
    gens = _matrix_of(args, G, "gens")
    eps_source = _matrix_of(args, G, "element")
    xe = wedge_elements(eps_source)
    xi = xi_approx(G, _budget_from(args))
    verdict = rubin_membership(xe, gens, xi)
    return serde.verdict_to_json(verdict)


def cmd_det(args):
    G = _group_of(args)
    if args.op == "free":
        obj = det_free(_matrix_of(args, G, "basis"))
        return {"generator": serde.central_to_json(obj.generator_central()),
                "grading": list(obj.grading)}
    if args.op == "tensor":
        X = det_free(_matrix_of(args, G, "basis"))
        Y = det_free(_matrix_of(args, G, "basis2"))
        Z = tensor(X, Y)
        return {"generator": serde.central_to_json(Z.generator_central()),
                "grading": list(Z.grading)}
    if args.op == "ses":
        iso = ses_iso(_matrix_of(args, G, "theta"),
                      _matrix_of(args, G, "phi"),
                      _matrix_of(args, G, "section"))
        return {"factor": serde.central_to_json(iso.factor),
                "sub_rank": iso.sub_rank, "quot_rank": iso.quot_rank}
    if args.op == "two-term":
        kwargs = {}
        for name in ("comparison", "ker_section", "cok_section"):
            if getattr(args, name):
                kwargs[name] = _matrix_of(args, G, name)
        value = two_term_nrd(_matrix_of(args, G, "theta"), **kwargs)
        return {"nrd": serde.central_to_json(value)}
    raise UsageError(f"unknown det op {args.op!r}")


def cmd_cyclo(args):
    if args.f is not None:
        if args.ell is None:
            raise UsageError("--f needs --ell")
        row = distribution_check(args.f, args.ell, args.convention)
        result = {"rows": [_cyclo_row(row)]}
        if not row.passed:
            raise MathFailure("distribution relation fails", result)
        return result
    rows = euler_family_check(args.fmax, args.ellmax, args.convention)
    result = {"rows": [_cyclo_row(r) for r in rows],
              "pairs": len(rows), "all_pass": all(r.passed for r in rows)}
    if not result["all_pass"]:
        raise MathFailure("a distribution relation fails", result)
    return result


def _cyclo_row(r):
    return {"f": r.conductor, "ell": r.prime,
            "lhs": serde.cyclo_to_json(r.lhs), "rhs": serde.cyclo_to_json(r.rhs),
            "verdict": "pass" if r.passed else "fail"}


def cmd_suite(args):
    budget = _budget_from(args)
    names = list(SUITES) if args.name == "all" else [args.name]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.name!r}; choose from "
                         f"{', '.join(SUITES)} or 'all'")
    results = []
    failed = False
    for n in names:
        r = run_suite(n, seed=args.seed, budget=budget, scale=args.scale)
        entry = {"suite": r.name, "seed": r.seed, "cases": r.cases,
                 "passed": r.passed, "failures": r.failures, "notes": r.notes}
        if not args.no_timestamp:
            entry["elapsed_s"] = round(r.elapsed, 3)
        results.append(entry)
        failed = failed or not r.passed
    result = {"suites": results}
    if failed:
        raise MathFailure("suite failures", result)
    return result


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="grax",
        description="exact group-ring algebra workbench (reduced norms, "
                    "Fitting invariants, exterior powers, cyclotomic relations)")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("--group", required=True, help="catalog name, e.g. S3, C6, D4")
            p.add_argument("--params", type=int, nargs="*", help="family parameters")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp for byte-identical reports")
        p.add_argument("--out", help="also write the report to a file")
        p.add_argument("--budget", help="JSON budget overrides (or @file)")

    p = sub.add_parser("group", help="catalog group data")
    p.add_argument("--name", required=True)
    p.add_argument("--params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("nrd", help="reduced norm of a square matrix")
    common(p)
    p.add_argument("--matrix", required=True, help="matrix JSON or @file")
    p.set_defaults(fn=cmd_nrd)

    p = sub.add_parser("adjoint", help="generalized adjoint with identity check")
    common(p)
    p.add_argument("--matrix", required=True)
    p.set_defaults(fn=cmd_adjoint)

    p = sub.add_parser("xi", help="budgeted Whitehead-order lattice")
    common(p)
    p.set_defaults(fn=cmd_xi)

    p = sub.add_parser("fit", help="non-commutative Fitting invariant lattice")
    common(p)
    p.add_argument("--matrix", required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--oracle-check", action="store_true",
                   help="compare against the classical minors ideal (abelian)")
    p.set_defaults(fn=cmd_fit)

    p = sub.add_parser("annihilate", help="central annihilation check")
    common(p)
    p.add_argument("--matrix", required=True)
    p.add_argument("--x", default="order",
                   help="central element JSON, or 'order' for |G| * 1")
    p.set_defaults(fn=cmd_annihilate)

    p = sub.add_parser("wedge", help="wedge of row elements")
    common(p)
    p.add_argument("--elements", required=True, help="matrix whose rows are wedged")
    p.set_defaults(fn=cmd_wedge)

    p = sub.add_parser("pair", help="duality pairing of hom and element wedges")
    common(p)
    p.add_argument("--homs", required=True)
    p.add_argument("--elements", required=True)
    p.set_defaults(fn=cmd_pair)

    p = sub.add_parser("epsilon", help="canonical kernel element of a presentation")
    common(p)
    p.add_argument("--matrix", required=True)
    p.set_defaults(fn=cmd_epsilon)

    p = sub.add_parser("rubin", help="Rubin-lattice membership verdict")
    common(p)
    p.add_argument("--element", required=True,
                   help="matrix whose row wedge is tested")
    p.add_argument("--gens", required=True, help="lattice generator rows")
    p.set_defaults(fn=cmd_rubin)

    p = sub.add_parser("det", help="graded determinant calculus")
    common(p)
    p.add_argument("--op", required=True, choices=["free", "tensor", "ses", "two-term"])
    p.add_argument("--basis")
    p.add_argument("--basis2")
    p.add_argument("--theta")
    p.add_argument("--phi")
    p.add_argument("--section")
    p.add_argument("--comparison")
    p.add_argument("--ker-section", dest="ker_section")
    p.add_argument("--cok-section", dest="cok_section")
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("cyclo", help="cyclotomic distribution relations")
    common(p, group=False)
    p.add_argument("--f", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--fmax", type=int, default=30)
    p.add_argument("--ellmax", type=int, default=13)
    p.add_argument("--convention", choices=["inverse", "direct"], default="inverse")
    p.set_defaults(fn=cmd_cyclo)

    p = sub.add_parser("suite", help="seeded property suites")
    common(p, group=False)
    p.add_argument("--name", required=True,
                   help=f"one of {', '.join(SUITES)}, or 'all'")
    p.add_argument("--scale", type=float, default=1.0,
                   help="scale the default case counts")
    p.set_defaults(fn=cmd_suite)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = 0
    try:
        result = args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MathFailure as exc:
        _report(args, args.command, {"error": str(exc), "witness": exc.witness},
                status="fail")
        return 1
    except (ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    _report(args, args.command, result, status="pass")
    return 0


if __name__ == "__main__":
    sys.exit(main())
