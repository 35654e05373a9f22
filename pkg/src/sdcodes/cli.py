"""Command-line driver: ``sdcodes {construct,verify,analyze,search,table}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or
precondition error, 3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import codefile
from .cosets import has_self_paired_residue
from .cyclic import (
    ConstructionError,
    CyclicCode,
    construct_dual_containing_bch,
    generator_matrix,
    is_dual_containing,
)
from .distance import (
    BudgetExceeded,
    default_budget,
    dual_matrix,
    extremal_upper_bound,
    min_distance,
    weight_enumerator,
)
from .gf import FieldError, field_of_order
from .selfdual import (
    FAMILIES,
    BoundViolation,
    EquivalenceError,
    LinearCode,
    certify_by_witness,
    certify_distance,
    component_of,
    family,
    is_self_dual,
    is_self_orthogonal,
    is_two_shift_closed,
    repeated_root_equivalence,
    rs_dual_containing,
    search_dual_containing,
    u_lambda_u_v,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(doc: dict, out: str | None = None) -> None:
    text = json.dumps(doc, separators=(",", ":"))
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load(path: str):
    try:
        return codefile.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


# -- construct --

def cmd_construct(args) -> int:
    if args.what == "bch":
        code = construct_dual_containing_bch(args.q, args.m, args.mu, args.delta)
    elif args.what == "selfdual":
        code = u_lambda_u_v(_load(args.source))
    elif args.what == "rs":
        code = rs_dual_containing(field_of_order(args.q), args.n, args.kso)
    else:
        code = family(args.q, args.m, args.mu, args.theorem).code
    _emit(codefile.to_document(code), args.out)
    return EXIT_OK


# -- verify --

def _check_self_dual(code):
    L = code if isinstance(code, LinearCode) else _as_linear(code)
    return is_self_dual(L), ""


def _as_linear(code: CyclicCode) -> LinearCode:
    return LinearCode(code.field, generator_matrix(code))


def _check_dual_containing(code):
    if isinstance(code, CyclicCode):
        return is_dual_containing(code), ""
    return is_self_orthogonal(code.field, dual_matrix(code)), ""


def _check_repeated_root(code):
    if not isinstance(code, LinearCode):
        return False, "needs a constructed linear code"
    comp = component_of(code)
    if not isinstance(comp, CyclicCode):
        return False, "component is not cyclic"
    try:
        perm, g = repeated_root_equivalence(comp, code)
    except (EquivalenceError, ValueError) as exc:
        return False, str(exc)
    return True, f"permutation={json.dumps(perm, separators=(',', ':'))} generator={json.dumps(list(g.coeffs), separators=(',', ':'))}"


def _check_shift2(code):
    if not isinstance(code, LinearCode) or code.n % 2:
        return False, "needs an even-length linear code"
    return is_two_shift_closed(code), ""


CHECKS = {
    "self-dual": _check_self_dual,
    "dual-containing": _check_dual_containing,
    "repeated-root": _check_repeated_root,
    "shift2": _check_shift2,
}


def cmd_verify(args) -> int:
    code = _load(args.code)
    checks = args.check or (["dual-containing"] if isinstance(code, CyclicCode) else ["self-dual"])
    status = EXIT_OK
    for name in checks:
        ok, detail = CHECKS[name](code)
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f" {detail}"
        print(line)
        if not ok:
            status = EXIT_FAIL
    return status


# -- analyze --

def _witness_json(w):
    return None if w is None else [int(x) for x in w]


def cmd_analyze(args) -> int:
    code = _load(args.code)
    budget = args.budget if args.budget is not None else default_budget()
    if args.what == "weights":
        W = weight_enumerator(code, args.strategy, budget)
        _emit({"format_version": codefile.FORMAT_VERSION, **W.to_json()})
        return EXIT_OK
    constructed = isinstance(code, LinearCode) and code.provenance.get("construction") == "u_lambda_u_v"
    cert = certify_by_witness(code) if constructed and args.strategy == "auto" else None
    if cert is not None:
        doc = {"d": cert.d, "route": "bound_witness", "witness": _witness_json(cert.witness)}
    elif constructed and args.strategy == "auto":
        cert = certify_distance(component_of(code), code.provenance["lambda"], budget)
        doc = {"d": cert.d, "route": "components", "witness": _witness_json(cert.witness),
               "component_distance": cert.component_distance, "dual_distance": cert.dual_distance}
    else:
        r = min_distance(code, args.strategy, budget)
        doc = {"d": r.d, "route": r.route, "witness": _witness_json(r.witness)}
    _emit({"format_version": codefile.FORMAT_VERSION, "n": code.n, "dim": code.k, "q": code.field.q,
           **doc, "exact": doc["d"] is not None})
    return EXIT_OK


# -- search --

def cmd_search(args) -> int:
    if has_self_paired_residue(args.n, args.q):
        print(f"note: self-paired residues exist mod {args.n}", file=sys.stderr)
    for code in search_dual_containing(args.n, args.q, args.dim, args.limit):
        _emit(codefile.to_document(code))
    return EXIT_OK


# -- table --

def _m_values(spec: str) -> list[int]:
    try:
        a, b = (int(x) for x in spec.split(":"))
    except ValueError as exc:
        raise UsageError(f"--m-range must look like A:B, got {spec!r}") from exc
    return [m for m in range(a, b + 1) if m % 2 == 1]


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.3f}"
    return str(x)


def cmd_table(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    header = ["q", "m", "mu", "n", "dim", "delta", "claimed", "computed", "exact_d", "extremal"]
    rows = []
    for m in _m_values(args.m_range):
        for mu in args.mu:
            try:
                member = family(args.q, m, mu, args.theorem)
            except ConstructionError as exc:
                print(f"skip q={args.q} m={m} mu={mu}: {exc}", file=sys.stderr)
                continue
            L = member.code
            exact = L.distance.lower if L.distance.exact else None
            if exact is None:
                try:
                    exact = certify_distance(member.component, budget=budget).d
                except BudgetExceeded:
                    pass
            extremal = extremal_upper_bound(L.n, args.q) if args.q in (2, 3) else None
            rows.append([args.q, m, mu, L.n, L.k, member.delta, member.claimed_bound,
                         member.computed_bound, exact, extremal])
    cells = [header] + [[_fmt(x) for x in r] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    for c in cells:
        print("  ".join(s.rjust(w) for s, w in zip(c, widths)).rstrip())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build a code and write its JSON file")
    con_sub = con.add_subparsers(dest="what", required=True)
    bch = con_sub.add_parser("bch", help="dual-containing narrow-sense BCH code")
    bch.add_argument("--q", type=int, required=True)
    bch.add_argument("--m", type=int, required=True)
    bch.add_argument("--mu", type=int, default=1)
    bch.add_argument("--delta", type=int)
    sd = con_sub.add_parser("selfdual", help="(u | lam u + v) code from a dual-containing code file")
    sd.add_argument("--from", dest="source", required=True)
    rs = con_sub.add_parser("rs", help="dual-containing Reed-Solomon code (q even)")
    rs.add_argument("--q", type=int, required=True)
    rs.add_argument("--n", type=int, required=True)
    rs.add_argument("--kso", type=int, required=True)
    fam = con_sub.add_parser("family", help="self-dual family member")
    fam.add_argument("--theorem", choices=sorted(FAMILIES), required=True)
    fam.add_argument("--q", type=int, required=True)
    fam.add_argument("--m", type=int, required=True)
    fam.add_argument("--mu", type=int, default=1)
    for p in (bch, sd, rs, fam):
        p.add_argument("--out")
    con.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="run invariant checks on a code file")
    ver.add_argument("--code", required=True)
    ver.add_argument("--check", action="append", choices=sorted(CHECKS))
    ver.set_defaults(func=cmd_verify)

    ana = sub.add_parser("analyze", help="exact minimum distance or weight enumerator")
    ana.add_argument("--code", required=True)
    ana.add_argument("what", choices=["mindist", "weights"])
    ana.add_argument("--strategy", choices=["auto", "exhaustive", "via_dual"], default="auto")
    ana.add_argument("--budget", type=int)
    ana.set_defaults(func=cmd_analyze)

    sea = sub.add_parser("search", help="dual-containing cyclic codes of a given dimension")
    sea.add_argument("--n", type=int, required=True)
    sea.add_argument("--q", type=int, required=True)
    sea.add_argument("--dim", type=int, required=True)
    sea.add_argument("--limit", type=int)
    sea.set_defaults(func=cmd_search)

    tab = sub.add_parser("table", help="tabulate a self-dual family")
    tab.add_argument("--theorem", choices=sorted(FAMILIES), required=True)
    tab.add_argument("--q", type=int, default=2)
    tab.add_argument("--m-range", required=True)
    tab.add_argument("--mu", type=int, nargs="+", default=[1])
    tab.add_argument("--budget", type=int)
    tab.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundViolation as exc:
        print(f"error: bound: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BudgetExceeded as exc:
        print(f"error: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ConstructionError, FieldError, codefile.CodeFileError, ValueError) as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
