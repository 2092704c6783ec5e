"""Command-line front end.

Subcommands: ``seq`` (print terms), ``hankel`` (build and evaluate one
Hankel determinant), ``verify`` (run claim harnesses), ``bench`` (time the
determinant engines).  Exit codes: 0 all requested checks pass, 1 a proven
claim failed, 2 usage error.  Failures of EXPERIMENTAL claims warn on
stderr and exit 0.

All big integers are rendered as decimal strings, never floats, and
identical inputs produce byte-identical CSV/JSON output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from . import verify
from ._backend import BACKEND
from .hankel import build_hankel, det_bareiss, det_dodgson, det_laplace, quotient_check
from .reports import VerificationReport
from .sequences import Family, SequenceId, prefix

_ENGINES = {"laplace": det_laplace, "bareiss": det_bareiss, "dodgson": det_dodgson}


def emit_report(report: VerificationReport, fmt: str = "text") -> bytes:
    """Render one report as CSV, JSON, or human-readable text (UTF-8 bytes)."""
    if fmt == "csv":
        return _reports_csv([report])
    if fmt == "json":
        return (json.dumps(_report_obj(report), separators=(",", ":")) + "\n").encode()
    if fmt == "text":
        return _report_text(report).encode()
    raise ValueError(f"unknown format {fmt!r}")


def emit_reports(reports: Sequence[VerificationReport], fmt: str = "text") -> bytes:
    """Render several reports as one document (single CSV header, JSON array)."""
    if fmt == "csv":
        return _reports_csv(reports)
    if fmt == "json":
        objs = [_report_obj(r) for r in reports]
        return (json.dumps(objs, separators=(",", ":")) + "\n").encode()
    if fmt == "text":
        return "".join(_report_text(r) for r in reports).encode()
    raise ValueError(f"unknown format {fmt!r}")


def _report_obj(report: VerificationReport) -> dict:
    passes, fails = report.totals()
    return {
        "claim_id": report.claim_id,
        "index_range": report.index_range,
        "experimental": report.experimental,
        "passed": report.passed,
        "totals": {"pass": passes, "fail": fails},
        "entries": [{"n": e.index, "value": e.value, "status": e.status} for e in report.entries],
        "witnesses": [
            {"n": w.index, "observed": w.observed, "expected": w.expected} for w in report.witnesses
        ],
    }


def _reports_csv(reports: Sequence[VerificationReport]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim_id", "n", "value", "status"])
    for report in reports:
        for e in report.entries:
            writer.writerow([report.claim_id, e.index, e.value, e.status])
    return buf.getvalue().encode()


def _report_text(report: VerificationReport) -> str:
    passes, fails = report.totals()
    tag = "PASS" if report.passed else "FAIL"
    if report.experimental:
        tag = f"EXPERIMENTAL:{tag}"
    lines = [f"[{tag}] {report.claim_id} ({report.index_range}): {passes}/{len(report.entries)} checks passed"]
    for w in report.witnesses:
        lines.append(f"    FAIL at {w.index}: observed {w.observed}, expected {w.expected}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hankelforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    families = [f.value for f in Family]

    p_seq = sub.add_parser("seq", help="print sequence terms 0..N")
    _add_family_args(p_seq, families)
    p_seq.add_argument("--n", type=int, required=True, metavar="N")
    p_seq.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_seq.set_defaults(func=_cmd_seq)

    p_hankel = sub.add_parser("hankel", help="evaluate one Hankel determinant exactly")
    _add_family_args(p_hankel, families)
    p_hankel.add_argument("--n", type=int, required=True, metavar="N",
                          help="order index: the matrix is (N+1) x (N+1)")
    p_hankel.add_argument("--engine", choices=sorted(_ENGINES), default="bareiss")
    p_hankel.add_argument("--base", type=int, help="run a quotient check against BASE**EXP")
    p_hankel.add_argument("--exp", type=int, help="quotient exponent (default: N)")
    p_hankel.set_defaults(func=_cmd_hankel)

    p_verify = sub.add_parser("verify", help="run claim harnesses")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="run every registered claim")
    group.add_argument("--claim", choices=verify.CLAIM_IDS, metavar="ID",
                       help=f"one of: {', '.join(verify.CLAIM_IDS)}")
    p_verify.add_argument("--n-max", type=int, default=None,
                          help="override the per-claim default index bound")
    p_verify.add_argument("--primes", type=_parse_primes, default=None, metavar="P1,P2,...",
                          help="primes for franel-prime-sums (default 5..97)")
    p_verify.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time determinant engines on one Hankel matrix")
    _add_family_args(p_bench, families)
    p_bench.add_argument("--n", type=int, required=True, metavar="N")
    p_bench.add_argument("--engines", type=_parse_engines, default=("bareiss", "dodgson"),
                         metavar="E1,E2,...")
    p_bench.add_argument("--repeat", type=int, default=1, metavar="K")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def _add_family_args(p: argparse.ArgumentParser, families: list[str]) -> None:
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--r", type=int, default=None, help="order for --family franel (default 3)")
    p.add_argument("--m", type=int, default=None, help="order for --family domb (default 2)")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def _parse_engines(text: str) -> tuple[str, ...]:
    engines = tuple(e.strip() for e in text.split(","))
    for e in engines:
        if e not in _ENGINES:
            raise argparse.ArgumentTypeError(f"unknown engine {e!r}")
    return engines


class _UsageError(Exception):
    pass


def _sequence_id(args) -> SequenceId:
    family = Family(args.family)
    if args.r is not None and family is not Family.FRANEL_R:
        raise _UsageError("--r applies to --family franel only")
    if args.m is not None and family is not Family.DOMB_M:
        raise _UsageError("--m applies to --family domb only")
    if family is Family.FRANEL_R:
        return SequenceId(family, 3 if args.r is None else args.r)
    if family is Family.DOMB_M:
        return SequenceId(family, 2 if args.m is None else args.m)
    return SequenceId(family)


def _cmd_seq(args) -> int:
    seq_id = _sequence_id(args)
    terms = prefix(seq_id, args.n).terms
    if args.format == "text":
        _write(" ".join(str(t) for t in terms) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "value"])
        for i, t in enumerate(terms):
            writer.writerow([i, t])
        _write(buf.getvalue())
    else:
        obj = {
            "family": seq_id.family.value,
            "param": seq_id.param if seq_id.family in (Family.FRANEL_R, Family.DOMB_M) else None,
            "n_max": args.n,
            "terms": [str(t) for t in terms],
        }
        _write(json.dumps(obj, separators=(",", ":")) + "\n")
    return 0


def _cmd_hankel(args) -> int:
    seq_id = _sequence_id(args)
    matrix = build_hankel(prefix(seq_id, 2 * args.n), args.n)
    result = _ENGINES[args.engine](matrix)
    _write(f"det {result.value}\n")
    _write(f"engine {result.algorithm}{' (bareiss fallback)' if result.fallback else ''}\n")
    _write(f"steps {result.steps}\n")
    _write(f"max_bits {result.max_bits}\n")
    if args.base is not None:
        exponent = args.n if args.exp is None else args.exp
        q = quotient_check(result.value, args.base, exponent)
        if q.is_integer:
            flags = f"odd={'yes' if q.is_odd else 'no'} positive={'yes' if q.is_positive else 'no'}"
            _write(f"quotient {q.quotient} ({flags})\n")
        else:
            _write(f"quotient none ({result.value} not divisible by {args.base}^{exponent})\n")
    elif args.exp is not None:
        raise _UsageError("--exp requires --base")
    return 0


def _cmd_verify(args) -> int:
    if args.all:
        reports = verify.run_all(args.n_max, args.primes)
    else:
        reports = [verify.run_claim(args.claim, args.n_max, args.primes)]
    sys.stdout.buffer.write(emit_reports(reports, args.format))
    sys.stdout.buffer.flush()
    exit_code = 0
    for report in reports:
        if report.passed:
            continue
        if report.experimental:
            print(f"WARNING: experimental claim {report.claim_id} reported failures (non-gating)",
                  file=sys.stderr)
        else:
            exit_code = 1
    return exit_code


def _cmd_bench(args) -> int:
    seq_id = _sequence_id(args)
    if args.repeat < 1:
        raise _UsageError("--repeat must be at least 1")
    matrix = build_hankel(prefix(seq_id, 2 * args.n), args.n)
    _write(f"backend {BACKEND}\n")
    _write(f"matrix {seq_id.label()} order {args.n + 1}\n")
    for engine in args.engines:
        times = []
        result = None
        for _ in range(args.repeat):
            start = time.perf_counter()
            result = _ENGINES[engine](matrix)
            times.append(time.perf_counter() - start)
        best = min(times)
        mean = sum(times) / len(times)
        _write(
            f"engine {engine}: best {best:.6f}s mean {mean:.6f}s "
            f"steps {result.steps} max_bits {result.max_bits}"
            f"{' (bareiss fallback)' if result.fallback else ''}\n"
        )
    return 0


def _write(text: str) -> None:
    sys.stdout.write(text)


def run(argv: Sequence[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse prints its own message; 2 on usage error
        return 0 if exc.code is None else int(exc.code)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
