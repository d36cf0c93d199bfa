"""Command-line front end.

Usage::

    legpoly gen <family-spec>
    legpoly expand (--family SPEC | --poly JSON) [--degree-bound N] [--route oracle|prop1]
    legpoly verify <identity-id> [--n-max N] [--variant euler-number|euler-at-zero]
    legpoly report [--n-max N] [--format json|csv|table] [--out PATH] [--no-meta]

Exit status: 0 success, 1 a verdict disagreed with its registered expectation,
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import OrderedDict
from datetime import datetime, timezone
from typing import Sequence, TextIO

from . import __version__
from .algebra import Poly, parse_rational
from .families import FamilySpec
from .identities import IdentityId, IdentityReport, InvalidParams, Variant, verify_all, verify_range
from .projection import DegreeBoundError, Route, expand

DEFAULT_N_MAX = 12

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def parse_poly_literal(text: str) -> Poly:
    """Parse ``["1/6","-1","1"]`` or the unquoted ``[1/6,-1,1]``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise UsageError(f"polynomial literal must be a bracketed list, got {text!r}")
    try:
        items = json.loads(s)
    except json.JSONDecodeError:
        body = s[1:-1].strip()
        items = [part.strip() for part in body.split(",")] if body else []
    coeffs = []
    for item in items:
        if isinstance(item, bool) or not isinstance(item, (str, int)):
            raise UsageError(f"bad coefficient {item!r}")
        try:
            coeffs.append(parse_rational(str(item)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return Poly(coeffs)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="legpoly", description="Exact Legendre expansions and identity checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    p_gen = sub.add_parser("gen", help="print a family polynomial")
    p_gen.add_argument("family", help="e.g. legendre:5, bernstein:2,5")

    p_exp = sub.add_parser("expand", help="expand a polynomial in the Legendre basis")
    src = p_exp.add_mutually_exclusive_group(required=True)
    src.add_argument("--family")
    src.add_argument("--poly", help='ascending coefficients, e.g. "[1/6,-1,1]"')
    p_exp.add_argument("--degree-bound", type=int)
    p_exp.add_argument("--route", choices=["oracle", "prop1"], default="oracle")

    p_ver = sub.add_parser("verify", help="verify one identity up to n-max")
    p_ver.add_argument("identity", choices=[i.value for i in IdentityId])
    p_ver.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p_ver.add_argument("--variant", choices=[v.value for v in Variant])

    p_rep = sub.add_parser("report", help="verify every identity and emit a verdict table")
    p_rep.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p_rep.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p_rep.add_argument("--out")
    p_rep.add_argument("--no-meta", action="store_true")
    return parser


def _check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")


def _exit_for(reports: Sequence[IdentityReport]) -> int:
    return EXIT_OK if all(r.matches_expected for r in reports) else EXIT_MISMATCH


def _cmd_gen(args) -> tuple[str, int]:
    spec = _parse_family(args.family)
    return _dumps(spec.generate().to_strings()), EXIT_OK


def _parse_family(text: str) -> FamilySpec:
    try:
        return FamilySpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_expand(args) -> tuple[str, int]:
    q = _parse_family(args.family).generate() if args.family else parse_poly_literal(args.poly)
    try:
        e = expand(q, args.degree_bound, Route(args.route))
    except DegreeBoundError as exc:
        raise UsageError(str(exc)) from None
    return _dumps(e.to_json()), EXIT_OK


def _cmd_verify(args) -> tuple[str, int]:
    _check_n_max(args.n_max)
    identity = IdentityId(args.identity)
    variant = Variant(args.variant) if args.variant else None
    try:
        reports = verify_range(identity, args.n_max, variant)
    except InvalidParams as exc:
        raise UsageError(str(exc)) from None
    return _dumps([r.to_json() for r in reports]), _exit_for(reports)


def summarize(reports: Sequence[IdentityReport]) -> list[dict]:
    groups: "OrderedDict[tuple, list[IdentityReport]]" = OrderedDict()
    for r in reports:
        key = (r.identity.value, r.params.variant.value if r.params.variant else "")
        groups.setdefault(key, []).append(r)
    rows = []
    for (ident, variant), rs in groups.items():
        corrected = [r.corrected_pass for r in rs if r.corrected_pass is not None]
        rows.append(
            {
                "identity": ident,
                "variant": variant,
                "cases": len(rs),
                "literal_pass": sum(r.literal_pass for r in rs),
                "literal_fail": sum(not r.literal_pass for r in rs),
                "corrected_pass": sum(corrected) if corrected else None,
                "as_expected": all(r.matches_expected for r in rs),
            }
        )
    return rows


def _meta(n_max: int) -> dict:
    return {
        "tool": "legpoly",
        "version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "n_max": n_max,
    }


def render_json(reports, n_max: int, meta: dict | None) -> str:
    doc = {}
    if meta is not None:
        doc["meta"] = meta
    doc["n_max"] = n_max
    doc["summary"] = summarize(reports)
    doc["reports"] = [r.to_json() for r in reports]
    return json.dumps(doc, indent=2, ensure_ascii=False)


CSV_FIELDS = [
    "identity", "n", "m", "j", "variant", "literal_pass", "corrected_pass",
    "correction_note", "expected_literal", "matches_expected", "witness",
]


def _csv_bool(v) -> str:
    return "" if v is None else ("true" if v else "false")


def render_csv(reports, meta: dict | None) -> str:
    buf = io.StringIO()
    if meta is not None:
        for key, value in meta.items():
            buf.write(f"# {key}={value}\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        p = r.params
        writer.writerow([
            r.identity.value,
            p.n,
            "" if p.m is None else p.m,
            "" if p.j is None else p.j,
            p.variant.value if p.variant else "",
            _csv_bool(r.literal_pass),
            _csv_bool(r.corrected_pass),
            r.correction_note,
            _csv_bool(r.expected_literal),
            _csv_bool(r.matches_expected),
            _dumps(r.witness.to_strings()),
        ])
    return buf.getvalue()


def render_table(reports, meta: dict | None) -> str:
    rows = summarize(reports)
    header = ["identity", "variant", "cases", "literal pass", "literal fail", "corrected pass", "status"]
    body = [
        [
            r["identity"],
            r["variant"] or "-",
            str(r["cases"]),
            str(r["literal_pass"]),
            str(r["literal_fail"]),
            "-" if r["corrected_pass"] is None else str(r["corrected_pass"]),
            "ok" if r["as_expected"] else "MISMATCH",
        ]
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    lines = []
    if meta is not None:
        lines.extend(f"# {k}: {v}" for k, v in meta.items())
    fmt = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()  # noqa: E731
    lines.append(fmt(header))
    lines.append("  ".join("-" * w for w in widths))
    lines.extend(fmt(line) for line in body)
    return "\n".join(lines)


def _cmd_report(args) -> tuple[str, int]:
    _check_n_max(args.n_max)
    reports = verify_all(args.n_max)
    meta = None if args.no_meta else _meta(args.n_max)
    if args.format == "json":
        text = render_json(reports, args.n_max, meta)
    elif args.format == "csv":
        text = render_csv(reports, meta)
    else:
        text = render_table(reports, meta)
    return text, _exit_for(reports)


_COMMANDS = {"gen": _cmd_gen, "expand": _cmd_expand, "verify": _cmd_verify, "report": _cmd_report}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help / --version
            return int(exc.code or 0)
        text, status = _COMMANDS[args.verb](args)
    except UsageError as exc:
        msg = str(exc)
        if not msg.startswith("usage:"):
            msg = f"{parser.format_usage()}legpoly: error: {msg}"
        stderr.write(msg.rstrip("\n") + "\n")
        return EXIT_USAGE

    out_path = getattr(args, "out", None)
    if out_path:
        newline = "" if args.format == "csv" else None
        with open(out_path, "w", encoding="utf-8", newline=newline) as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        stderr.write(f"wrote {out_path}\n")
    else:
        stdout.write(text if text.endswith("\n") else text + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
