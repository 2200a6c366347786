"""Command-line front end: ``python -m descalg {spectrum,minpoly,verify,faces} ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import combinatorics as cb
from . import face_monoid as fm
from . import group_algebra as ga
from . import knapsack as ks
from . import theorems as th
from .exact_linalg import Polynomial, krylov_min_poly
from .fields import QQ, Field, parse_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

ELEMENTS = ("Balpha", "w0Balpha", "Balphaw0", "T1", "w0T1", "T1w0", "Bgamma", "w0Bgamma")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    alpha: tuple[int, ...] | None = None
    gamma: ks.WeightVector | None = None
    field: Field = QQ
    element: str | None = None
    claims: tuple[str, ...] = ()
    fmt: str = "pretty"
    bounds: th.Bounds = th.DEFAULT_BOUNDS
    timing: bool = True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="descalg", description="Descent algebra, face algebra and knapsack spectra.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--alpha", help="composition such as 1,3")
    common.add_argument("--gamma", type=Path, help="JSON weight file {\"1,2\": \"1/3\", ...}")
    common.add_argument("--field", default="Q", choices=("Q", "Fp"))
    common.add_argument("--p", type=int, help="prime for --field Fp")
    common.add_argument("--format", dest="fmt", default="pretty", choices=("json", "csv", "pretty"))
    common.add_argument("--max-n-override", type=int, help="raise every size bound to this n")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="knapsack and signed spectra with face counts")
    mp = sub.add_parser("minpoly", parents=[common], help="minimal polynomial of a selected element")
    mp.add_argument("--element", required=True, choices=ELEMENTS)
    vp = sub.add_parser("verify", parents=[common], help="run verification claims")
    group = vp.add_mutually_exclusive_group(required=True)
    group.add_argument("--claim", choices=th.CLAIMS)
    group.add_argument("--all", action="store_true")
    vp.add_argument("--no-timing", action="store_true", help="omit millis from reports")
    sub.add_parser("faces", parents=[common], help="list faces in canonical order")
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    try:
        field = parse_field(args.field, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    alpha = gamma = None
    try:
        if args.alpha is not None:
            alpha = cb.parse_composition(args.alpha, n)
        if args.gamma is not None:
            gamma = ks.WeightVector.from_json(n, args.gamma.read_text())
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    bounds = th.Bounds.override(args.max_n_override) if args.max_n_override else th.DEFAULT_BOUNDS
    claims: tuple[str, ...] = ()
    if args.command == "verify":
        claims = th.CLAIMS if args.all else (args.claim,)
    return RunConfig(args.command, n, alpha, gamma, field, getattr(args, "element", None), claims,
                     args.fmt, bounds, not getattr(args, "no_timing", False))


# -- output helpers ------------------------------------------------------------------


def _emit_table(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, keys, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    out.write("  ".join(k.ljust(widths[k]) for k in keys).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(r[k]).ljust(widths[k]) for k in keys).rstrip() + "\n")


# -- commands ------------------------------------------------------------------------


def cmd_spectrum(cfg: RunConfig, out) -> int:
    if cfg.alpha is None and cfg.gamma is None:
        raise UsageError("spectrum needs --alpha or --gamma")
    cfg.bounds.check("combinatorics", cfg.n)
    if cfg.alpha is not None:
        plain = ks.knapsack_multiplicities(cfg.alpha)
        signed = ks.signed_multiplicities(cfg.alpha)
        label = {"alpha": cb.format_composition(cfg.alpha)}
    else:
        plain = ks.weighted_multiplicities(cfg.gamma)
        signed = ks.weighted_signed_multiplicities(cfg.gamma)
        label = {"gamma": json.loads(cfg.gamma.to_json())}
    if cfg.fmt == "pretty":
        out.write(f"n = {cfg.n}, {', '.join(f'{k} = {v}' for k, v in label.items())}\n")
        out.write("knapsack spectrum: {" + ", ".join(map(str, plain)) + "}\n")
        out.write("signed spectrum:   {" + ", ".join(map(str, signed)) + "}\n")
        rows = [{"value": str(v), "faces": c} for v, c in signed.items()]
        out.write("signed value counts:\n")
        _emit_table(rows, "pretty", out)
        return EXIT_OK
    rows = ([{"kind": "knapsack", "value": str(v), "faces": c} for v, c in plain.items()]
            + [{"kind": "signed", "value": str(v), "faces": c} for v, c in signed.items()])
    if cfg.fmt == "json":
        out.write(json.dumps({"n": cfg.n, **label,
                              "knapsack_spectrum": [str(v) for v in plain],
                              "signed_spectrum": [str(v) for v in signed],
                              "knapsack_counts": {str(v): c for v, c in plain.items()},
                              "signed_counts": {str(v): c for v, c in signed.items()}}) + "\n")
    else:
        _emit_table(rows, "csv", out)
    return EXIT_OK


def select_element(cfg: RunConfig):
    n, field, sel = cfg.n, cfg.field, cfg.element
    if sel in ("Balpha", "w0Balpha", "Balphaw0"):
        if cfg.alpha is None:
            raise UsageError(f"--element {sel} needs --alpha")
        B = ga.basis_B_comp(cfg.alpha, field)
        return {"Balpha": lambda: B, "w0Balpha": lambda: ga.w0(n, field) * B,
                "Balphaw0": lambda: B * ga.w0(n, field)}[sel]()
    if sel in ("T1", "w0T1", "T1w0"):
        if n < 1:
            raise UsageError("top-to-random needs n >= 1")
        T = ga.top_to_random(n, 1, field)
        return {"T1": lambda: T, "w0T1": lambda: ga.w0(n, field) * T, "T1w0": lambda: T * ga.w0(n, field)}[sel]()
    if cfg.gamma is None:
        raise UsageError(f"--element {sel} needs --gamma")
    Bg = ga.weighted_B(cfg.gamma, field)
    return Bg if sel == "Bgamma" else ga.w0(n, field) * Bg


def _format_poly(mu: Polynomial, fmt: str) -> str:
    data = mu.to_json()
    if fmt == "json":
        return json.dumps(data) + "\n"
    if fmt == "csv":
        return "degree,coefficient\n" + "".join(f"{i},{c}\n" for i, c in enumerate(data["coefficients"]))
    lines = [f"minimal polynomial over {data['field']}: {mu}",
             "coefficients (lowest degree first): " + " ".join(data["coefficients"])]
    if "factored" in data:
        lines.append(f"factored: {data['factored']}")
    return "\n".join(lines) + "\n"


def cmd_minpoly(cfg: RunConfig, out) -> int:
    cfg.bounds.check("group", cfg.n)
    a = select_element(cfg)
    out.write(_format_poly(krylov_min_poly(a), cfg.fmt))
    return EXIT_OK


def _write_report(report: th.VerificationReport, cfg: RunConfig, out, first: bool) -> None:
    if cfg.fmt == "pretty":
        status = "PASS" if report.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in report.params.items() if k != "gamma")
        extra = f"  witness: {report.witness}" if report.witness else ""
        out.write(f"{status}  {report.claim}  {params}{extra}\n")
    elif cfg.fmt == "csv":
        if first:
            out.write("claim,params,pass,witness\n")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow(
            [report.claim, json.dumps(report.params), report.passed, report.witness or ""])
        out.write(buf.getvalue())
    else:
        out.write(report.to_json(cfg.timing) + "\n")
    out.flush()


def cmd_verify(cfg: RunConfig, out) -> int:
    """Single claims propagate bound/precondition errors; ``--all`` skips inapplicable claims."""
    p = cfg.field.p if cfg.field != QQ else 3
    single = len(cfg.claims) == 1
    passed = True
    count = 0
    for claim in cfg.claims:
        if cfg.n <= 1 and claim.startswith("ttr"):
            if single:
                raise UsageError(f"claim {claim} needs n > 1")
            continue
        try:
            reports = th.run_claim(claim, cfg.n, cfg.alpha, cfg.gamma, p, cfg.bounds)
        except th.BoundExceeded as exc:
            if single:
                raise
            print(f"skipped {claim}: {exc}", file=sys.stderr)
            continue
        for report in reports:
            _write_report(report, cfg, out, count == 0)
            count += 1
            passed = passed and report.passed
    return EXIT_OK if passed else EXIT_FAIL


def cmd_faces(cfg: RunConfig, out) -> int:
    cfg.bounds.check("combinatorics", cfg.n)
    rows = []
    for F in fm.enumerate_faces(cfg.n):
        row = {"face": str(F), "type": cb.format_composition(fm.face_type(F)), "length": len(F)}
        if cfg.alpha is not None:
            k = ks.knapsack_number(cfg.alpha, F)
            row["n_alpha"] = k
            row["signed"] = ks.sign(F) * k
        rows.append(row)
    _emit_table(rows, cfg.fmt, out)
    return EXIT_OK


COMMANDS = {"spectrum": cmd_spectrum, "minpoly": cmd_minpoly, "verify": cmd_verify, "faces": cmd_faces}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = make_config(args)
        return COMMANDS[cfg.command](cfg, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except th.BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # Reader went away (e.g. piped into head); silence the flush at exit.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)
