"""Command-line front end: emit matrices and code reports, run the
verification suite, and reproduce the published numeric tables.

Payload goes to standard output (or --output); diagnostics go to standard
error.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .fieldcodes import CodeReport, FpMatrix, analyze, format_matrix_text, row_space_code
from .repweights import ModuleSpec, build_weight_matrix
from .verify import (
    SuiteReport,
    TableRow,
    VerifyLimits,
    registered_cases,
    reproduce_table,
    run_suite,
    suite_to_dict,
)

__all__ = ["run", "console", "emit"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_WORKERS_ENV = "LIECODES_WORKERS"


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(_WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecodes",
        description="Weight codes of simple Lie algebra modules over F2 and F3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_module: bool) -> None:
        if with_module:
            p.add_argument("--family", required=True, choices=["A", "D", "E6", "E7", "E8", "F4"])
            p.add_argument("--n", type=int, help="sl(n) size parameter (family A)")
            p.add_argument("--m", type=int, help="o(2m) size parameter (family D)")
            p.add_argument(
                "--module",
                required=True,
                choices=["ext2", "ext3", "ext4", "adjoint", "spin", "adjoint_plus_spin", "minimal"],
            )
            p.add_argument("--field", type=int, required=True, choices=[2, 3])
            p.add_argument("--mode", choices=["weight_code", "direct_sum"], help="adjoint_plus_spin block layout")
        p.add_argument("--format", default="text", choices=["text", "json", "csv"])
        p.add_argument("--output", help="write the payload to this file instead of standard output")

    pm = sub.add_parser("matrix", help="emit a weight matrix reduced mod the field")
    common(pm, True)

    pr = sub.add_parser("report", help="emit the code report of a module")
    common(pr, True)
    pr.add_argument("--workers", type=int, default=None, help=f"enumeration workers (default ${_WORKERS_ENV} or 1)")

    pv = sub.add_parser("verify", help="run the claim verification suite")
    pv.add_argument("--filter", default=None, help="case id pattern, e.g. thm2.2 or thm3.*")
    pv.add_argument("--max-n", type=int, default=15, help="largest sl(n) size to run")
    pv.add_argument("--max-m", type=int, default=11, help="largest o(2m) size to run")
    pv.add_argument("--workers", type=int, default=None)
    pv.add_argument("--include-optional", action="store_true", help="run the large flagged cases as well")
    pv.add_argument("--stable", action="store_true", help="zero timing fields for byte-identical output")
    pv.add_argument("--format", default="text", choices=["text", "json", "csv"])
    pv.add_argument("--output", help="write the payload to this file instead of standard output")

    pt = sub.add_parser("table", help="reproduce a published weight table")
    pt.add_argument("table_id", help="table identifier, e.g. 2.1")
    pt.add_argument("--format", default="text", choices=["text", "json", "csv"])
    pt.add_argument("--output", help="write the payload to this file instead of standard output")

    return parser


def _module_spec(args: argparse.Namespace) -> ModuleSpec:
    if args.family == "A":
        if args.n is None:
            raise ValueError("family A needs --n")
        rank = args.n
    elif args.family == "D":
        if args.m is None:
            raise ValueError("family D needs --m")
        rank = args.m
    else:
        rank = {"F4": 4, "E6": 6, "E7": 7, "E8": 8}[args.family]
    return ModuleSpec(args.family, rank, args.module, args.field, mode=args.mode)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _matrix_payload(matrix: FpMatrix, labels: tuple[str, ...], fmt: str) -> str:
    if fmt == "text":
        return format_matrix_text(matrix)
    if fmt == "json":
        payload = {
            "p": matrix.p,
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": matrix.entries.tolist(),
            "column_labels": list(labels),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return _csv_text(list(labels), [list(map(int, row)) for row in matrix.entries])


def _report_text(report: CodeReport) -> str:
    lines = [
        f"p: {report.p}",
        f"n: {report.n}",
        f"k: {report.k}",
        f"d: {report.d if report.d is not None else 'undefined'}",
        f"self_orthogonal: {str(report.self_orthogonal).lower()}",
        f"self_dual: {str(report.self_dual).lower()}",
    ]
    if report.p == 2:
        lines.append(f"even: {str(report.even).lower()}")
        lines.append(f"doubly_even: {str(report.doubly_even).lower()}")
    dist = " ".join(
        f"{w}:{c}" for w, c in enumerate(report.weight_distribution) if c
    )
    lines.append(f"weight_distribution: {dist}")
    return "\n".join(lines) + "\n"


def _report_payload(report: CodeReport, fmt: str) -> str:
    if fmt == "text":
        return _report_text(report)
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    d = report.to_dict()
    dist = d.pop("weight_distribution")
    d["weight_distribution"] = " ".join(f"{w}:{c}" for w, c in enumerate(dist) if c)
    header = list(d.keys())
    return _csv_text(header, [[d[h] for h in header]])


def _suite_text(report: SuiteReport, stable: bool) -> str:
    cases = {c.case_id: c for c in registered_cases()}
    lines = []
    for res in report.results:
        if res.skipped:
            status = "SKIP"
            detail = "resource limits"
        elif res.passed:
            status = "PASS"
            rep = res.report
            detail = f"[{rep.n},{rep.k},{rep.d}]"
        else:
            status = "FAIL"
            detail = "; ".join(res.mismatches)
        millis = 0.0 if stable else res.millis
        note = ""
        case = cases[res.case_id]
        if case.annotation is not None and not res.skipped:
            note = "  (documented discrepancy: " + case.annotation.note + ")"
        lines.append(f"{status}  {res.case_id:<22} {detail:<18} {millis:9.1f} ms{note}")
    t = report.totals
    lines.append(
        f"total: {t['cases']}  passed: {t['passed']}  failed: {t['failed']}  skipped: {t['skipped']}"
    )
    return "\n".join(lines) + "\n"


def _suite_payload(report: SuiteReport, fmt: str, stable: bool) -> str:
    if fmt == "text":
        return _suite_text(report, stable)
    if fmt == "json":
        return json.dumps(suite_to_dict(report, stable=stable), indent=2, sort_keys=True) + "\n"
    rows = []
    for res in report.results:
        status = "skip" if res.skipped else ("pass" if res.passed else "fail")
        params = ""
        if res.report is not None:
            params = f"[{res.report.n},{res.report.k},{res.report.d}]"
        rows.append([res.case_id, status, params, 0.0 if stable else round(res.millis, 3)])
    return _csv_text(["case_id", "status", "params", "millis"], rows)


def _table_payload(rows: tuple[TableRow, ...], fmt: str) -> str:
    if fmt == "json":
        payload = [
            {
                "label": r.label,
                "stated": r.stated,
                "computed": r.computed,
                "match": r.match,
                "annotated": r.annotated,
            }
            for r in rows
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _csv_text(
            ["label", "stated", "computed", "match", "annotated"],
            [[r.label, r.stated, r.computed, r.match, r.annotated] for r in rows],
        )
    lines = [f"{'label':<14} {'stated':>7} {'computed':>9}  note"]
    for r in rows:
        note = "ok"
        if r.annotated:
            note = "stated value superseded by computation"
        elif not r.match:
            note = "MISMATCH"
        lines.append(f"{r.label:<14} {r.stated:>7} {r.computed:>9}  {note}")
    return "\n".join(lines) + "\n"


def emit(obj, fmt: str = "text", stable: bool = False, labels: tuple[str, ...] = ()) -> str:
    """Render a matrix, code report, suite report or table comparison."""
    if isinstance(obj, FpMatrix):
        return _matrix_payload(obj, labels or tuple(f"c{j + 1}" for j in range(obj.cols)), fmt)
    if isinstance(obj, CodeReport):
        return _report_payload(obj, fmt)
    if isinstance(obj, SuiteReport):
        return _suite_payload(obj, fmt, stable)
    if isinstance(obj, tuple) and obj and isinstance(obj[0], TableRow):
        return _table_payload(obj, fmt)
    raise TypeError(f"cannot emit {type(obj).__name__}")


def _write_payload(payload: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def run(argv=None) -> int:
    """Entry point; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        if args.command == "matrix":
            spec = _module_spec(args)
            wm = build_weight_matrix(spec)
            payload = _matrix_payload(wm.mod(spec.p), wm.column_labels, args.format)
            _write_payload(payload, args.output)
            return EXIT_OK

        if args.command == "report":
            spec = _module_spec(args)
            wm = build_weight_matrix(spec)
            workers = args.workers if args.workers is not None else _default_workers()
            report = analyze(row_space_code(wm.mod(spec.p)), workers=workers)
            _write_payload(_report_payload(report, args.format), args.output)
            return EXIT_OK

        if args.command == "verify":
            workers = args.workers if args.workers is not None else _default_workers()
            limits = VerifyLimits(max_n=args.max_n, max_m=args.max_m)
            suite = run_suite(
                filter=args.filter,
                limits=limits,
                include_optional=args.include_optional,
                workers=workers,
            )
            _write_payload(_suite_payload(suite, args.format, args.stable), args.output)
            return EXIT_OK if suite.totals["failed"] == 0 else EXIT_VERIFY_FAILED

        # table
        rows = reproduce_table(args.table_id)
        _write_payload(_table_payload(rows, args.format), args.output)
        return EXIT_OK if all(r.match for r in rows) else EXIT_VERIFY_FAILED

    except ValueError as exc:
        print(f"liecodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console() -> None:
    sys.exit(run())
