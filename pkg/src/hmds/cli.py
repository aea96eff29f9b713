"""Command-line entry point.

Every command prints one JSON document to stdout.  Exit codes: 0 the
property holds or the operation succeeded, 2 the property is violated,
1 usage or parse error, 3 the instance is too large for brute force.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formats import CodeDescription, code_from_json, code_to_json
from .linalg import dual
from .listdec import CodeTooLarge, duality_check, is_ld_mds
from .rs import expurgate, is_mds_ell_rs, pseudo_shorten, puncture
from .sizer import (BoundParams, bound_new, bound_prior, dependency_bound, exhaustive_min_q,
                    random_search)
from .verifier import check_definition3, is_mds_ell, is_mds_ell_reduced

EXIT_OK, EXIT_USAGE, EXIT_VIOLATED, EXIT_TOO_LARGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, doc) -> None:
    indent = 2 if getattr(args, "pretty", False) else None
    sys.stdout.write(json.dumps(doc, indent=indent, sort_keys=False) + "\n")


def _load(path: str) -> CodeDescription:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return code_from_json(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"malformed code description in {path}: {exc}") from exc


def _progress(args):
    if not getattr(args, "progress", False):
        return None
    return lambda count: print(f"checked {count} collections", file=sys.stderr, flush=True)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _verify(desc: CodeDescription, ell: int, method: str, args):
    progress = _progress(args)
    threads = getattr(args, "threads", 1) or 1
    if method == "poly-det":
        if desc.kind != "rs":
            raise UsageError("--method poly-det needs an rs code")
        return is_mds_ell_rs(desc.rs(), ell, "poly-det", progress=progress)
    if method == "auto":
        if desc.kind == "rs":
            return is_mds_ell_rs(desc.rs(), ell, "poly-det", reduced=True, progress=progress)
        return is_mds_ell_reduced(desc.matrix(), ell, "block-det", progress=progress)
    if method == "reduced":
        return is_mds_ell_reduced(desc.matrix(), ell, "block-det", progress=progress)
    return is_mds_ell(desc.matrix(), ell, method, workers=threads, progress=progress)


def cmd_verify(args) -> int:
    desc = _load(args.code)
    rep = _verify(desc, args.ell, args.method, args)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.holds else EXIT_VIOLATED


def cmd_transform(args) -> int:
    desc = _load(args.code)
    if desc.kind != "rs":
        raise UsageError("transforms apply to rs codes")
    code = desc.rs()
    op, _, arg = args.op.partition(":")
    try:
        if op == "expurgate" and not arg:
            out = expurgate(code)
        elif op in ("puncture", "pseudo-shorten") and arg:
            j = int(arg) - 1
            out = puncture(code, j) if op == "puncture" else pseudo_shorten(code, j)
        else:
            raise UsageError(f"unknown transform {args.op!r}")
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from exc
    doc = out.to_json()
    status = EXIT_OK
    if args.verify_ell is not None:
        rep = _verify(CodeDescription.from_rs(out), args.verify_ell, "auto", args)
        doc["report"] = rep.to_json()
        status = EXIT_OK if rep.holds else EXIT_VIOLATED
    _emit(args, doc)
    return status


def cmd_ld_check(args) -> int:
    desc = _load(args.code)
    try:
        rep, wit = is_ld_mds(desc.matrix(), args.L)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = rep.to_json()
    if wit is not None:
        doc["ld_witness"] = wit.to_json()
    _emit(args, doc)
    return EXIT_OK if rep.holds else EXIT_VIOLATED


def cmd_dual(args) -> int:
    desc = _load(args.code)
    try:
        H = dual(desc.matrix())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, code_to_json(H))
    return EXIT_OK


def cmd_duality(args) -> int:
    desc = _load(args.code)
    rep = duality_check(desc.matrix(), args.ell)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.holds else EXIT_VIOLATED


def cmd_bound(args) -> int:
    try:
        p = BoundParams(args.n, args.k, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    calcs = {
        "new": lambda: bound_new(p, proof_form=args.proof_form),
        "prior": lambda: bound_prior(p),
        "dependency": lambda: dependency_bound(p, proof_form=args.proof_form),
    }
    names = list(calcs) if args.formula == "all" else [args.formula]
    doc = {"n": p.n, "k": p.k, "ell": p.ell, "Delta": p.Delta,
           "bounds": {name: calcs[name]().to_json() for name in names}}
    if args.json or not args.pretty:
        _emit(args, doc)
    else:
        for name, b in doc["bounds"].items():
            print(f"{name:>10}: q >= {b['exact']}  (log2 {b['log2']:.3f})")
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        res = random_search(args.n, args.k, args.ell, args.q, args.seed, args.max_trials)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, res.to_json())
    return EXIT_OK if res.found else EXIT_VIOLATED


def cmd_min_q(args) -> int:
    res = exhaustive_min_q(args.n, args.k, args.ell, args.q_max)
    if res is None:
        _emit(args, {"q": None})
        return EXIT_VIOLATED
    q, code = res
    _emit(args, {"q": q, "code": code.to_json()})
    return EXIT_OK


def cmd_oracle(args) -> int:
    """Run every available MDS(l) decision route on one code and compare."""
    desc = _load(args.code)
    V = desc.matrix()
    reports = {
        "subspace": is_mds_ell(V, args.ell, "subspace"),
        "block-det": is_mds_ell(V, args.ell, "block-det"),
        "reduced": is_mds_ell_reduced(V, args.ell),
    }
    if desc.kind == "rs":
        reports["poly-det"] = is_mds_ell_rs(desc.rs(), args.ell, "poly-det")
    if not args.skip_definition:
        reports["definition"] = check_definition3(V, args.ell, args.trials, seed=args.seed)
    verdicts = {name: r.holds for name, r in reports.items()}
    agree = len(set(verdicts.values())) == 1
    _emit(args, {"agree": agree, "verdicts": verdicts,
                 "reports": {name: r.to_json() for name, r in reports.items()}})
    return EXIT_OK if agree else EXIT_VIOLATED


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--progress", action="store_true", help="heartbeats on stderr")
    common.add_argument("--threads", type=int, default=1, help="worker processes")

    parser = _Parser(prog="hmds", description="Higher-order MDS code toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="decide MDS(l)")
    p.add_argument("code")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--method", default="auto",
                   choices=["auto", "subspace", "block-det", "poly-det", "reduced"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", parents=[common], help="expurgate / puncture / pseudo-shorten")
    p.add_argument("code")
    p.add_argument("--op", required=True, help="expurgate | puncture:j | pseudo-shorten:j (1-based)")
    p.add_argument("--verify-ell", type=int, default=None)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("ld-check", parents=[common], help="brute-force LD-MDS(L)")
    p.add_argument("code")
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(func=cmd_ld_check)

    p = sub.add_parser("dual", parents=[common], help="dual code generator")
    p.add_argument("code")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("duality", parents=[common], help="MDS(l+1) vs dual LD-MDS(<=l)")
    p.add_argument("code")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("bound", parents=[common], help="field-size bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--formula", default="all", choices=["new", "prior", "dependency", "all"])
    p.add_argument("--proof-form", action="store_true", help="use ceil(Delta/l)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", parents=[common], help="random RS point search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-trials", type=int, default=10000)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("min-q", parents=[common], help="smallest field with an MDS(l) RS code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.set_defaults(func=cmd_min_q)

    p = sub.add_parser("oracle", parents=[common], help="cross-validate all MDS(l) routes")
    p.add_argument("code")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--skip-definition", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"hmds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CodeTooLarge as exc:
        print(f"hmds: refusing brute force: {exc} (estimate {exc.estimate})", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
