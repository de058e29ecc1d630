"""Command-line interface: ``leibniz3 <command> ...``.

Exit codes: 0 success, 1 negative verdict (invalid algebra, failed bound,
not an ideal), 2 malformed input or usage error, 3 enumeration budget
refused.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra3 import Algebra3, algebra_to_json, format_vector, is_lie3, is_valid, read_algebra, validate
from .bounds import schur_report, tightness_gap
from .errors import (BudgetExceededError, FormatError, InvalidAlgebraError, NotAnIdealError,
                     UnsupportedFieldError, UsageError)
from .exactfield import parse_field
from .explorer import DEFAULT_BUDGET, enumerate_algebras
from .generators import CentralFamilySpec, abelian, central_family, direct_sum, filippov4
from .linalg import matrix_to_json, subspace_from_json, subspace_to_json
from .structure import CenterKind, centers, derived_ideal, is_ideal, quotient


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _machine(args, out) -> bool:
    isatty = getattr(out, "isatty", None)
    return args.json or not (isatty and isatty())


def _load(path) -> Algebra3:
    try:
        return read_algebra(path)
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def _load_subspace(path, field):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return subspace_from_json(obj, field)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _require_valid(a):
    if not is_valid(a):
        v = validate(a, max_reports=1)[0]
        raise InvalidAlgebraError(
            f"algebra violates the left Leibniz 3-identity at quintuple {v.quintuple}")


def _table(rows) -> str:
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


def _write_out(text, path, out):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


# -- commands -----------------------------------------------------------------

def cmd_validate(args, out):
    a = _load(args.algebra)
    bad = validate(a, max_reports=args.max_reports)
    if args.json:
        out.write(_dump({
            "valid": not bad,
            "violations": [{"quintuple": list(v.quintuple),
                            "defect": [a.field.format(x) for x in v.defect]} for v in bad],
        }))
    else:
        out.write("valid\n" if not bad else "invalid\n")
        for v in bad:
            out.write(f"  {tuple(v.quintuple)}: defect {format_vector(a.field, v.defect)}\n")
    return 0 if not bad else 1


def cmd_info(args, out):
    a = _load(args.algebra)
    _require_valid(a)
    cs = centers(a)
    der = derived_ideal(a)
    rep = schur_report(a)
    info = {
        "field": str(a.field),
        "dim": a.dim,
        "centers": {k.value: s.dim for k, s in cs.items()},
        "derived_dim": der.dim,
        "derived_is_ideal": is_ideal(a, der),
        "report": rep.to_dict(),
    }
    if _machine(args, out):
        out.write(_dump(info))
    else:
        rows = [("field", info["field"]), ("dim", a.dim)]
        rows += [(f"dim center[{k}]", v) for k, v in info["centers"].items()]
        rows += [("dim [L,L,L]", der.dim), ("[L,L,L] is ideal", info["derived_is_ideal"])]
        rows += list(rep.to_dict().items())
        out.write(_table(rows))
    return 0


def cmd_centers(args, out):
    a = _load(args.algebra)
    cs = centers(a)
    if args.kind:
        out.write(_dump(subspace_to_json(cs[CenterKind(args.kind)])))
    else:
        out.write(_dump({k.value: subspace_to_json(s) for k, s in cs.items()}))
    return 0


def cmd_derived(args, out):
    a = _load(args.algebra)
    out.write(_dump(subspace_to_json(derived_ideal(a))))
    return 0


def cmd_bounds(args, out):
    a = _load(args.algebra)
    rep = schur_report(a)
    if _machine(args, out):
        d = rep.to_dict()
        g = tightness_gap(rep)
        d["gaps"] = {"thm": g[0], "cor1": g[1], "cor2": g[2]}
        out.write(_dump(d))
    else:
        out.write(_table(list(rep.to_dict().items())))
    return 0 if rep.all_hold else 1


def cmd_quotient(args, out):
    a = _load(args.algebra)
    ideal = _load_subspace(args.ideal, a.field)
    if ideal.ambient_dim != a.dim:
        raise UsageError(f"ideal has ambient dimension {ideal.ambient_dim}, algebra has {a.dim}")
    q, proj = quotient(a, ideal)
    _write_out(algebra_to_json(q), args.out, out)
    if args.projection:
        _write_out(_dump(matrix_to_json(proj)), args.projection, out)
    return 0


def cmd_check_lie(args, out):
    a = _load(args.algebra)
    verdict = is_lie3(a)
    if args.json:
        out.write(_dump({"lie3": verdict}))
    else:
        out.write("true\n" if verdict else "false\n")
    return 0


def cmd_generate(args, out):
    field = parse_field(args.field)
    fam = args.family
    if fam == "abelian":
        a = abelian(_need(args.dim, "--dim"), field)
    elif fam == "central":
        a = central_family(CentralFamilySpec(_need(args.gen_dim, "--gen-dim"),
                                             _need(args.cent_dim, "--cent-dim"), args.seed, field))
    elif fam == "filippov4":
        a = filippov4(field)
    else:
        if not args.summand or len(args.summand) < 2:
            raise UsageError("--family direct-sum needs at least two --summand files")
        parts = [_load(p) for p in args.summand]
        for p in parts:
            _require_valid(p)
        a = parts[0]
        for b in parts[1:]:
            a = direct_sum(a, b)
    _write_out(algebra_to_json(a), args.out, out)
    return 0


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    if value < 0:
        raise UsageError(f"{flag} must be non-negative")
    return value


def cmd_enumerate(args, out):
    field = parse_field(args.field)
    summary = enumerate_algebras(field, args.dim, budget=args.budget,
                                 out_dir=args.out_dir, workers=args.workers)
    out.write(_dump(summary.to_dict()))
    return 0 if summary.bound_violations == 0 and summary.oracle_disagreements == 0 else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leibniz3", description="Leibniz 3-algebras from structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_algebra(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("algebra", help="algebra JSON file")
        p.add_argument("--json", action="store_true", help="force machine-readable output")
        p.set_defaults(func=func)
        return p

    p = with_algebra("validate", cmd_validate, "check the left Leibniz 3-identity")
    p.add_argument("--max-reports", type=int, default=100)
    with_algebra("info", cmd_info, "center and derived ideal dimensions plus the bound report")
    p = with_algebra("centers", cmd_centers, "the five centers as subspaces")
    p.add_argument("--kind", choices=[k.value for k in CenterKind])
    with_algebra("derived", cmd_derived, "the derived ideal [L,L,L]")
    with_algebra("bounds", cmd_bounds, "Schur-type bound report")
    p = with_algebra("quotient", cmd_quotient, "factor algebra by an ideal")
    p.add_argument("--ideal", required=True, help="subspace JSON file")
    p.add_argument("-o", "--out", help="write the quotient algebra here instead of stdout")
    p.add_argument("--projection", help="write the projection matrix JSON here")
    with_algebra("check-lie", cmd_check_lie, "test for a Lie 3-algebra")

    p = sub.add_parser("generate", help="build an algebra from a known-valid family")
    p.add_argument("--family", required=True, choices=["abelian", "central", "filippov4", "direct-sum"])
    p.add_argument("--dim", type=int)
    p.add_argument("--gen-dim", type=int)
    p.add_argument("--cent-dim", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="Q", help="Q or Fp:<p>")
    p.add_argument("--summand", action="append", help="algebra file (direct-sum; repeat)")
    p.add_argument("-o", "--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="scan every structure tensor over a small prime field")
    p.add_argument("--field", required=True, help="Fp:<p>")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out-dir")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except (FormatError, UsageError, UnsupportedFieldError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except NotAnIdealError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except InvalidAlgebraError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except BudgetExceededError as exc:
        err.write(f"refused: {exc}\n")
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
