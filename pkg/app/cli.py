"""
Command-line front end.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error. JSON output renders big integers as decimal strings.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, TextIO, Tuple

from pydantic import BaseModel, ValidationError

from app.core.config import settings
from app.core.errors import JaggedError
from app.core.logging import configure_logging
from app.schemas.cli import CommandRequest
from app.schemas.counting import CongruencePrediction
from app.schemas.identities import IdentityReport, SuiteReport
from app.services.counting_service import congruence_predict, congruence_verify, count_report, slice_report
from app.services.families_service import parse_family, partitions_report
from app.services.genfun_service import series_report
from app.services.identities_service import verify, verify_all
from app.services.suite_service import run_suite


logger = logging.getLogger(__name__)

Outcome = Tuple[BaseModel, bool, List[str]]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jagged", description="Jagged partitions: enumeration, counting and identities")
    parser.add_argument(
        "subcommand",
        choices=["enumerate", "count", "genfun", "slice", "congruence", "identity", "suite"],
    )
    parser.add_argument("--family", default="01", help="01, 02, 012, 001, 0p1:<p> or a constraint string like d1:1,d2:0;tail=1")
    parser.add_argument("--weight", type=int)
    parser.add_argument("--length", type=int)
    parser.add_argument("--upto", type=int)
    parser.add_argument("--order", type=int)
    parser.add_argument("--r", type=int)
    parser.add_argument("--s", type=int)
    parser.add_argument("--modulus", type=int)
    parser.add_argument("--min-index", dest="min_index", type=int, default=0)
    parser.add_argument("--name", help="identity, multi-sum or q-difference system name")
    parser.add_argument("--zmax", type=int)
    parser.add_argument("--source", default="closed_form", choices=["closed_form", "enumeration", "qdiff", "multisum"])
    parser.add_argument("--staircase", action="store_true", help="genfun: apply the staircase weight shift")
    parser.add_argument("--staircase-map", dest="staircase_map", action="store_true", help="enumerate: show staircase images")
    parser.add_argument("--format", default="text", choices=["text", "json"])
    parser.add_argument("--out", help="also write the JSON report to this path")
    parser.add_argument("--log-level", dest="log_level", default=None)
    return parser


def _tuple_text(parts: List[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _enumerate(request: CommandRequest) -> Outcome:
    report = partitions_report(parse_family(request.family), request.weight, request.length, request.staircase_map)
    if report.staircase is None:
        lines = [_tuple_text(p) for p in report.partitions]
    else:
        lines = [f"{_tuple_text(p)} -> {_tuple_text(lam)}" for p, lam in zip(report.partitions, report.staircase)]
    return report, True, lines


def _count(request: CommandRequest) -> Outcome:
    report = count_report(request.weight)
    lines = [
        f"j({report.n}) = {report.recurrence}",
        f"convolution: {report.convolution}",
        f"series: {report.series}",
    ]
    if report.enumeration is not None:
        lines.append(f"enumeration: {report.enumeration}")
    if report.squares is not None:
        terms = " ".join(f"{p}:{c}" for p, c in report.squares.terms.items())
        lines.append(f"squares (p:signed count): {terms}")
    if report.estimate is not None:
        lines.append(f"estimate: {report.estimate:.6g}")
    agree = {report.recurrence, report.convolution, report.series}
    if report.enumeration is not None:
        agree.add(report.enumeration)
    return report, len(agree) == 1, lines


def _genfun(request: CommandRequest) -> Outcome:
    family = request.name if request.source in ("qdiff", "multisum") and request.name else request.family
    report = series_report(family, request.source, request.zmax, request.order, request.staircase)
    lines = [f"z^{m}: " + " ".join(str(c) for c in row) for m, row in enumerate(report.rows)]
    return report, True, lines


def _slice(request: CommandRequest) -> Outcome:
    report = slice_report(request.r, request.s, request.order)
    return report, True, [" ".join(str(c) for c in report.coefficients)]


def _congruence(request: CommandRequest) -> Outcome:
    if request.modulus is None:
        prediction = congruence_predict(request.r, request.s)
        if request.upto is None:
            return prediction, True, [_prediction_text(prediction)]
        modulus = prediction.modulus
    else:
        modulus = request.modulus
    report = congruence_verify(request.r, request.s, modulus, request.upto, request.min_index)
    lines = [f"{report.claim} on [{report.range[0]}, {report.range[1]}]: {report.status}"]
    if report.counterexample is not None:
        ce = report.counterexample
        lines.append(f"counterexample: n={ce.n}, j({ce.argument}) = {ce.value}")
    return report, report.status == "pass", lines


def _prediction_text(p: CongruencePrediction) -> str:
    return (
        f"j({p.r}n+{p.s}) = 0 (mod {p.modulus}): p'={p.p_prime}, c={p.c}, a={p.factor}"
        + (", upgraded" if p.upgraded else "")
    )


def _identity_lines(report: IdentityReport) -> List[str]:
    line = f"{report.name}: {report.status} (order {report.order})"
    if report.mismatch is not None:
        m = report.mismatch
        line += f" first mismatch at exponent {m.exponent}: {m.lhs} != {m.rhs}"
    return [line]


def _identity(request: CommandRequest) -> Outcome:
    if request.name == "all":
        reports = verify_all(request.order or 1)
        failed = sum(r.status == "fail" for r in reports)
        summary = SuiteReport(
            status="fail" if failed else "pass",
            passed=len(reports) - failed,
            failed=failed,
            identities=reports,
        )
        return summary, not failed, [line for r in reports for line in _identity_lines(r)]
    report = verify(request.name, request.order)
    lines = _identity_lines(report) + [f"  {line}" for member in report.members for line in _identity_lines(member)]
    return report, report.status == "pass", lines


def _suite(request: CommandRequest) -> Outcome:
    report = run_suite(request.order)
    lines = [f"[{e.status}] {e.claim}" + (f" ({e.detail})" if e.detail else "") for e in report.entries]
    lines.append(f"{report.passed} passed, {report.failed} failed")
    return report, report.status == "pass", lines


HANDLERS: Dict[str, Callable[[CommandRequest], Outcome]] = {
    "enumerate": _enumerate,
    "count": _count,
    "genfun": _genfun,
    "slice": _slice,
    "congruence": _congruence,
    "identity": _identity,
    "suite": _suite,
}


def run(request: CommandRequest, stream: TextIO | None = None) -> int:
    """Dispatch a validated request and write its output."""
    stream = stream or sys.stdout
    logger.info("running %s", request.subcommand)
    try:
        report, ok, lines = HANDLERS[request.subcommand](request)
    except JaggedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = report.model_dump_json(indent=2)
    if request.out:
        try:
            Path(request.out).write_text(payload + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write report to {request.out}: {exc}", file=sys.stderr)
            return 2
    if request.format == "json":
        stream.write(payload + "\n")
    else:
        stream.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def main(argv: List[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.log_level or settings.log_level)
    fields = {key: value for key, value in vars(args).items() if key != "log_level"}
    try:
        request = CommandRequest(**fields)
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        print(f"usage error: {messages}", file=sys.stderr)
        return 2
    return run(request)


if __name__ == "__main__":
    sys.exit(main())
