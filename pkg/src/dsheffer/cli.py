"""Command line interface.

Subcommands: expand, verify, recurrence, functionals, catalog-list.  A
construction source is either a built-in family (--family with --d, --param,
--aux) or a couple document (--couple-file).  Exit codes: 0 success / all
checks pass, 1 verification failure, 2 invalid parameters or contract
violation, 3 I/O or parse error.

Rationals on the command line and in files are exact "p/q" strings; decimal
notation is rejected.  Reports are deterministic: identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from dsheffer import catalog, render
from dsheffer.dorth import (
    RegularityViolationError,
    WindowViolationError,
    extract_recurrence,
    verify_d_orthogonality,
    verify_duality,
    verify_lowering,
)
from dsheffer.exactnum import parse_rational
from dsheffer.operators import DERIVATIVE, FunctionalVector, functional_eval, lowering_from_H
from dsheffer.series import Poly
from dsheffer.sheffer import (
    CoupleFileError,
    CoupleSpec,
    InvalidCoupleError,
    check_conditions,
    couple_from_json_dict,
    expand_polynomials,
    pair_from_couple,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BAD_PARAMS = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Source:
    """Resolved construction source: a family spec or a raw couple."""

    def __init__(self, spec=None, couple: CoupleSpec | None = None):
        self.spec = spec
        self.couple = couple

    @property
    def is_family(self) -> bool:
        return self.spec is not None

    @property
    def d(self) -> int:
        return self.spec.d if self.spec is not None else self.couple.d

    def to_jsonable(self) -> dict:
        if self.is_family:
            return {
                "kind": "family",
                "family": self.spec.family,
                "d": self.spec.d,
                "params": {k: str(v) for k, v in self.spec.params.items()},
                "aux": None if self.spec.aux is None else [str(a) for a in self.spec.aux],
            }
        return {"kind": "couple", **self.couple.to_jsonable()}

    def pair(self, N: int):
        if self.is_family:
            return catalog.family_generating(self.spec, N)
        return pair_from_couple(self.couple, N)

    def lowering(self, N: int):
        if self.is_family:
            return catalog.family_lowering(self.spec, N)
        return lowering_from_H(self.pair(N).Hx, DERIVATIVE, N)


def _parse_param_items(items) -> dict[str, Fraction]:
    params = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise CliError(EXIT_BAD_PARAMS, f"--param expects name=value, got {item!r}")
        try:
            params[name.strip()] = parse_rational(value)
        except ValueError as exc:
            raise CliError(EXIT_BAD_PARAMS, f"--param {name}: {exc}") from None
    return params


def _parse_aux(text: str | None):
    if text is None:
        return None
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise CliError(EXIT_BAD_PARAMS, f"--aux: {exc}") from None


def _resolve_source(args) -> _Source:
    has_family = getattr(args, "family", None) is not None
    has_file = getattr(args, "couple_file", None) is not None
    if has_family == has_file:
        raise CliError(EXIT_BAD_PARAMS, "give exactly one of --family or --couple-file")
    if has_family:
        if args.family not in catalog.FAMILIES:
            known = ", ".join(catalog.FAMILIES)
            raise CliError(EXIT_BAD_PARAMS, f"unknown family {args.family!r}; known: {known}")
        info = catalog.FAMILIES[args.family]
        d = args.d if args.d is not None else (info.d_fixed or info.d_min)
        spec = catalog.FamilySpec(
            family=args.family,
            d=d,
            params=_parse_param_items(args.param),
            aux=_parse_aux(args.aux),
        )
        catalog.require_valid(spec)
        return _Source(spec=spec)
    if args.d is not None or args.param or args.aux is not None:
        raise CliError(EXIT_BAD_PARAMS, "--d/--param/--aux only apply to --family sources")
    try:
        text = Path(args.couple_file).read_text()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read couple file: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_IO, f"couple file is not valid JSON: {exc}") from None
    return _Source(couple=couple_from_json_dict(doc))


def _emit(args, text: str):
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write output: {exc}") from None
    else:
        sys.stdout.write(text)


def cmd_expand(args) -> int:
    source = _resolve_source(args)
    N = args.order
    seq = expand_polynomials(source.pair(N), N)
    if args.format == render.JSON:
        doc = {
            "command": "expand",
            "order": N,
            "source": source.to_jsonable(),
            "polynomials": [
                {"n": n, "coeffs": [str(c) for c in p.coeffs], "text": p.pretty()}
                for n, p in enumerate(seq)
            ],
        }
        _emit(args, render.dump_json(doc))
    elif args.format == render.CSV:
        headers = ["n", "text"] + [f"c{k}" for k in range(N + 1)]
        rows = []
        for n, p in enumerate(seq):
            cells = [str(p.coeff(k)) for k in range(N + 1)]
            rows.append([n, p.pretty()] + cells)
        _emit(args, render.dump_csv(headers, rows))
    else:
        headers = ["$n$", "$P_n(x)$"]
        rows = [[n, f"${p.latex()}$"] for n, p in enumerate(seq)]
        _emit(args, render.dump_latex_table(headers, rows, align="r|l"))
    return EXIT_OK


def _recurrence_section(seq, d):
    try:
        table = extract_recurrence(seq, d)
    except WindowViolationError as exc:
        return None, {
            "status": "fail",
            "details": {
                "error": "window-violation",
                "n": exc.n,
                "index": exc.index,
                "value": str(exc.value),
            },
        }
    except RegularityViolationError as exc:
        return None, {
            "status": "fail",
            "details": {"error": "regularity-violation", "rows": list(exc.rows)},
        }
    return table, {"status": "pass", "details": table.to_jsonable()}


def cmd_verify(args) -> int:
    source = _resolve_source(args)
    N = args.order
    check_d = args.check_d if args.check_d is not None else source.d
    if check_d < 1:
        raise CliError(EXIT_BAD_PARAMS, f"--check-d must be >= 1, got {check_d}")
    big = 2 * N

    couple = catalog.family_couple(source.spec) if source.is_family else source.couple
    pair = source.pair(big)
    seq = expand_polynomials(pair, N)

    sections = {}

    cond = check_conditions(couple, N)
    sections["conditions"] = {
        "status": "pass" if cond.passed else "fail",
        "details": cond.to_jsonable(),
    }

    if source.is_family:
        other = expand_polynomials(pair_from_couple(couple, N), N)
        mismatches = [
            {"n": n, "closed_form": seq[n].pretty(), "from_couple": other[n].pretty()}
            for n in range(N + 1)
            if seq[n] != other[n]
        ]
        sections["two_path"] = {
            "status": "pass" if not mismatches else "fail",
            "details": {"compared_through": N, "mismatches": mismatches},
        }
    else:
        sections["two_path"] = {
            "status": "skipped",
            "details": {"reason": "raw couples have a single construction route"},
        }

    _, sections["recurrence"] = _recurrence_section(seq, check_d)

    lop = source.lowering(big)
    fv = FunctionalVector(A=pair.A, lop=lop, d=check_d)
    dual = verify_duality(seq, fv)
    sections["duality"] = {
        "status": "pass" if dual.passed else "fail",
        "details": dual.to_jsonable(),
    }
    orth = verify_d_orthogonality(seq, fv)
    sections["orthogonality"] = {
        "status": "pass" if orth.passed else "fail",
        "details": orth.to_jsonable(),
    }
    low = verify_lowering(seq, lop)
    sections["lowering"] = {
        "status": "pass" if low.passed else "fail",
        "details": low.to_jsonable(),
    }

    ok = all(s["status"] in ("pass", "skipped") for s in sections.values())
    report = {
        "command": "verify",
        "order": N,
        "check_d": check_d,
        "source": source.to_jsonable(),
        "overall": "pass" if ok else "fail",
        **sections,
    }
    _emit(args, render.dump_json(report))
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_recurrence(args) -> int:
    source = _resolve_source(args)
    N = args.order
    d = source.d
    seq = expand_polynomials(source.pair(N), N)
    table = extract_recurrence(seq, d)  # violations surface as exit 1 via main
    if args.format == render.JSON:
        doc = {
            "command": "recurrence",
            "order": N,
            "source": source.to_jsonable(),
            "table": table.to_jsonable(),
        }
        _emit(args, render.dump_json(doc))
        return EXIT_OK
    headers_plain = ["n"] + [f"alpha_{k}" for k in range(d + 2)]
    rows = [[n] + [str(c) for c in row] for n, row in enumerate(table.rows)]
    if args.format == render.CSV:
        _emit(args, render.dump_csv(headers_plain, rows))
    else:
        headers = ["$n$"] + [f"$\\alpha_{{{k},{d}}}(n)$" for k in range(d + 2)]
        body = [[row[0]] + [f"${c}$" for c in row[1:]] for row in rows]
        _emit(args, render.dump_latex_table(headers, body))
    return EXIT_OK


def cmd_functionals(args) -> int:
    source = _resolve_source(args)
    N = args.order
    d = source.d
    if args.index is not None and not 0 <= args.index < d:
        raise CliError(EXIT_BAD_PARAMS, f"--index must lie in 0..{d - 1}, got {args.index}")
    indices = range(d) if args.index is None else (args.index,)

    if source.is_family:
        fv = catalog.family_functionals(source.spec, N)
        explicit = catalog.explicit_functional(source.spec)
    else:
        pair = source.pair(N)
        fv = FunctionalVector(A=pair.A, lop=lowering_from_H(pair.Hx, DERIVATIVE, N), d=d)
        explicit = None

    rows = []
    all_match = True
    for i in indices:
        for m in range(N + 1):
            mono = Poly.monomial(m) if m else Poly.one()
            value = functional_eval(fv, i, mono)
            cross = None
            if explicit is not None:
                label, fn = explicit
                cross_value = fn(i, mono)
                match = cross_value == value
                all_match = all_match and match
                cross = {"evaluator": label, "value": str(cross_value), "match": match}
            rows.append({
                "i": i,
                "m": m,
                "value": str(value),
                "evaluator": "operator-series",
                "cross_check": cross,
            })

    if args.format == render.JSON:
        doc = {
            "command": "functionals",
            "order": N,
            "source": source.to_jsonable(),
            "rows": rows,
        }
        _emit(args, render.dump_json(doc))
    elif args.format == render.CSV:
        headers = ["i", "m", "value", "evaluator", "cross_evaluator", "cross_value", "match"]
        body = []
        for row in rows:
            cross = row["cross_check"]
            body.append([
                row["i"], row["m"], row["value"], row["evaluator"],
                cross["evaluator"] if cross else "",
                cross["value"] if cross else "",
                str(cross["match"]).lower() if cross else "",
            ])
        _emit(args, render.dump_csv(headers, body))
    else:
        headers = ["$i$", "$m$", "$\\langle u_i, x^m\\rangle$", "cross-check"]
        body = []
        for row in rows:
            cross = row["cross_check"]
            note = ""
            if cross:
                note = f"{cross['evaluator']}: {'ok' if cross['match'] else 'MISMATCH'}"
            body.append([row["i"], row["m"], f"${row['value']}$", note])
        _emit(args, render.dump_latex_table(headers, body, align="rr|rl"))
    return EXIT_OK if all_match else EXIT_VERIFY_FAIL


def cmd_catalog_list(args) -> int:
    families = []
    for info in catalog.FAMILIES.values():
        families.append({
            "family": info.family,
            "label": info.label,
            "operator_kind": info.kind,
            "params": list(info.params),
            "aux": info.aux_text,
            "d_min": info.d_min,
            "d_fixed": info.d_fixed,
            "restrictions": info.restrictions,
            "generating_function": info.generating_text,
        })
    _emit(args, render.dump_json({"command": "catalog-list", "families": families}))
    return EXIT_OK


def _add_source_args(sub):
    sub.add_argument("--family", help="built-in family id (see catalog-list)")
    sub.add_argument("--couple-file", help="path to a couple JSON document")
    sub.add_argument("--d", type=int, default=None, help="orthogonality order d")
    sub.add_argument("--param", action="append", metavar="NAME=P/Q",
                     help="family parameter (repeatable)")
    sub.add_argument("--aux", metavar="P/Q,...",
                     help="auxiliary polynomial coefficients a_0,a_1,...")


def _add_common_args(sub, formats=True):
    sub.add_argument("--order", type=int, default=16,
                     help="truncation / expansion order N (default 16)")
    sub.add_argument("--out", help="write output to this path instead of stdout")
    if formats:
        sub.add_argument("--format", choices=render.FORMATS, default=render.JSON)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsheffer",
        description="Construct and verify d-orthogonal Sheffer polynomial sets "
                    "with exact rational arithmetic.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("expand", help="expand P_0..P_N from a family or couple")
    _add_source_args(p)
    _add_common_args(p)
    p.set_defaults(handler=cmd_expand)

    p = subs.add_parser("verify", help="run the full verification suite (JSON report)")
    _add_source_args(p)
    _add_common_args(p, formats=False)
    p.add_argument("--check-d", type=int, default=None,
                   help="verify against this d instead of the source's d")
    p.set_defaults(handler=cmd_verify)

    p = subs.add_parser("recurrence", help="extract the (d+2)-term recurrence table")
    _add_source_args(p)
    _add_common_args(p)
    p.set_defaults(handler=cmd_recurrence)

    p = subs.add_parser("functionals", help="tabulate <u_i, x^m> with cross-checks")
    _add_source_args(p)
    _add_common_args(p)
    p.add_argument("--index", type=int, default=None,
                   help="only this functional index i (default: all i < d)")
    p.set_defaults(handler=cmd_functionals)

    p = subs.add_parser("catalog-list", help="list built-in families and restrictions")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(handler=cmd_catalog_list)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (WindowViolationError, RegularityViolationError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    except CoupleFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (catalog.InvalidParameterError, InvalidCoupleError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
