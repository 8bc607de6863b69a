"""
The acceptance checks, each returning a named pass/fail entry.

This is the single verification entry point used by ``jagged suite`` and the
``/identities/suite`` endpoint.
"""

from __future__ import annotations

import logging
import time
from functools import partial
from typing import Callable, List, Tuple

from app.core.config import settings
from app.core.errors import CountingError
from app.schemas.identities import SuiteEntry, SuiteReport
from app.services import counting_service as counting
from app.services import families_service as families
from app.services import genfun_service as genfun
from app.services.identities_service import verify, verify_all


logger = logging.getLogger(__name__)

LENGTH_FIVE_PARTITIONS: Tuple[Tuple[int, ...], ...] = (
    (1, 0, 1, 0, 1),
    (2, 0, 1, 0, 1),
    (1, 1, 1, 0, 1),
    (3, 0, 1, 0, 1),
    (2, 1, 1, 0, 1),
    (1, 1, 1, 1, 1),
    (1, 2, 1, 0, 1),
    (4, 0, 1, 0, 1),
    (3, 1, 1, 0, 1),
    (2, 2, 1, 0, 1),
    (2, 1, 1, 1, 1),
    (1, 2, 1, 1, 1),
    (2, 1, 2, 0, 1),
    (5, 0, 1, 0, 1),
    (4, 1, 1, 0, 1),
    (3, 2, 1, 0, 1),
    (3, 1, 1, 1, 1),
    (2, 2, 1, 1, 1),
    (2, 3, 1, 0, 1),
    (2, 1, 2, 1, 1),
    (1, 2, 1, 2, 1),
    (3, 1, 2, 0, 1),
    (2, 2, 2, 0, 1),
)

WEIGHT_THREE_LENGTHS: Tuple[int, ...] = (0, 1, 2, 2, 1, 1, 1)

J15_SQUARES = {4: -12, 6: -20, 7: 7, 9: 36, 12: -12, 15: 1}

Check = Callable[[], SuiteEntry]


def _entry(claim: str, ok: bool, detail: str = "") -> SuiteEntry:
    return SuiteEntry(claim=claim, status="pass" if ok else "fail", detail=detail)


def check_length_five_list() -> SuiteEntry:
    found = {p for n in range(8) for p in families.enumerate_partitions(families.F01, n, 5)}
    missing = set(LENGTH_FIVE_PARTITIONS) - found
    extra = found - set(LENGTH_FIVE_PARTITIONS)
    return _entry(
        "01-partitions of weight <= 7 and length 5",
        not missing and not extra,
        f"{len(found)} found, {len(missing)} missing, {len(extra)} unexpected",
    )


def check_weight_three_polynomial() -> SuiteEntry:
    expected = list(WEIGHT_THREE_LENGTHS) + [0] * (8 - len(WEIGHT_THREE_LENGTHS) + 1)
    closed = [genfun.closed_form("01", 8, 4).coefficient(m, 3) for m in range(9)]
    j, _ = counting.jk_tables(8, 3)
    recurrence = [j[m, 3] for m in range(9)]
    profile = families.length_profile(families.F01, 3)
    enumerated = [profile.get(m, 0) for m in range(9)]
    return _entry(
        "coefficient of q^3 in J(z;q) by closed form, recurrence and enumeration",
        closed == recurrence == enumerated == expected,
        f"closed form {closed}",
    )


def check_j_agreement() -> SuiteEntry:
    breakdown = counting.j_by_squares(15)
    recurrence = counting.j_by_recurrence(25).as_list()
    convolution = counting.j_by_convolution(25).as_list()
    series = counting.j_by_series(25).as_list()
    enumerated = [len(families.enumerate_partitions(families.F01, n)) for n in range(26)]
    ok = (
        breakdown.total == 1472
        and breakdown.terms == J15_SQUARES
        and recurrence == convolution == series == enumerated
    )
    return _entry("j(15) = 1472 by squares; four methods agree for n <= 25", ok, f"j(25) = {recurrence[25]}")


def check_congruences() -> SuiteEntry:
    values = counting.j_table(500)
    even = all(values[n] % 2 == 0 for n in range(2, 301))
    powers = counting.power_of_two_check(300).status == "pass"
    cor10 = counting.congruence_verify(8, 7, 64, 500).status == "pass"
    s2 = counting.congruence_predict(7, 2)
    s3 = counting.congruence_predict(7, 3)
    s5 = counting.congruence_predict(7, 5)
    predictions = s2.modulus == 2 and s3.modulus % 4 == 0 and s5.modulus == 8
    return _entry(
        "parity, 2^min_squares(n) | j(n), 64 | j(8n+7), predictions for r = 7",
        even and powers and cor10 and predictions,
        f"r=7 moduli: s=2 -> {s2.modulus}, s=3 -> {s3.modulus}, s=5 -> {s5.modulus}",
    )


def check_slices() -> SuiteEntry:
    reports = [verify("eq18", 30), verify("eq20", 30)]
    failed = [r.name for r in reports if r.status == "fail"]
    return _entry("slices of J along r n + s as eta quotients, order 30", not failed, f"failed: {failed}" if failed else "")


def check_identity_suite(order: int | None = None) -> SuiteEntry:
    reports = verify_all(order or settings.default_order)
    failed = [r.name for r in reports if r.status == "fail"]
    return _entry(f"{len(reports)} registered identities", not failed, f"failed: {failed}" if failed else "")


def check_closed_forms() -> SuiteEntry:
    weight = 16
    mismatched = []
    for spec in (families.F01, families.F02, families.F012, families.F001):
        z_max = spec.zero_slack_distance * weight
        if genfun.closed_form(spec.name, z_max, weight + 1) != genfun.family_series(spec, z_max, weight + 1):
            mismatched.append(spec.name)
    j59 = genfun.closed_form("02", 6, 10).coefficient(5, 9)
    return _entry(
        "closed forms equal enumeration counts for n <= 16",
        not mismatched and j59 == 7,
        f"mismatched: {mismatched}; 02 coefficient of z^5 q^9 = {j59}",
    )


def check_multisums() -> SuiteEntry:
    z_max, order = 6, 16
    pairs = {
        "sum-01-restricted": genfun.family_transform(genfun.closed_form("01", z_max, order), families.F01),
        "sum-02": genfun.closed_form("02", z_max, order),
        "sum-02-restricted": genfun.family_transform(genfun.closed_form("02", z_max, order), families.F02),
        "sum-012": genfun.closed_form("012", z_max, order),
        "sum-012-restricted": genfun.family_transform(genfun.closed_form("012", z_max, order), families.F012),
        "sum-001-restricted": genfun.family_transform(genfun.closed_form("001", z_max, order), families.F001),
    }
    mismatched = [name for name, expected in pairs.items() if genfun.multisum(name, z_max, order) != expected]
    for spec in (families.F01, families.F02, families.F012, families.F001):
        if genfun.restricted_series(spec.restricted_conditions(), z_max, order) != pairs[f"sum-{spec.name}-restricted"]:
            mismatched.append(f"restricted {spec.name}")
    return _entry("multi-sums and restricted partitions at (6, 16)", not mismatched, f"mismatched: {mismatched}")


def check_qdiff() -> SuiteEntry:
    mismatched = []
    for name in ("01", "02", "012", "001"):
        if genfun.solve_family(name, 8, 14) != genfun.closed_form(name, 8, 14):
            mismatched.append(name)
    a = genfun.solve_family("01-restricted", 6, 18)
    if a != genfun.family_transform(genfun.closed_form("01", 6, 18), families.F01):
        mismatched.append("01-restricted")
    third_order = (
        genfun.dilate(a, 1)
        + genfun.bi_scale(genfun.dilate(a, 1), 1, 1, 1)
        + genfun.bi_scale(genfun.dilate(a, 2), 1, 2, 2)
        - genfun.bi_scale(genfun.dilate(a, 3), 1, 3, 5)
    )
    if a != third_order or a != genfun.solve_family("01-restricted-single", 6, 18):
        mismatched.append("third-order relation")
    return _entry("q-difference systems reproduce their closed forms", not mismatched, f"mismatched: {mismatched}")


def check_at_most() -> SuiteEntry:
    try:
        for m in range(21):
            for n in range(21):
                counting.j_at_most(m, n)
    except CountingError as exc:
        return _entry("j_m(n) by both formulas, m, n <= 20", False, str(exc))
    return _entry("j_m(n) by both formulas, m, n <= 20", True)


def check_estimate() -> SuiteEntry:
    values = counting.j_table(100)
    errors = {n: abs(counting.ramanujan_estimate(n) / values[n] - 1) for n in range(10, 101)}
    within = all(errors[n] < 0.02 for n in range(15, 101))
    first = sum(errors[n] for n in range(15, 58)) / 43
    second = sum(errors[n] for n in range(58, 101)) / 43
    return _entry(
        "asymptotic estimate within 2% for 15 <= n <= 100, improving with n",
        within and second < first and errors[100] < errors[10],
        f"max error {max(errors[n] for n in range(15, 101)):.2e}",
    )


def checks(order: int | None = None) -> List[Check]:
    return [
        check_length_five_list,
        check_weight_three_polynomial,
        check_j_agreement,
        check_congruences,
        check_slices,
        partial(check_identity_suite, order),
        check_closed_forms,
        check_multisums,
        check_qdiff,
        check_at_most,
        check_estimate,
    ]


def run_suite(order: int | None = None) -> SuiteReport:
    entries = []
    for check in checks(order):
        started = time.perf_counter()
        entry = check()
        logger.info("%s: %s (%.2fs)", entry.claim, entry.status, time.perf_counter() - started)
        entries.append(entry)
    failed = sum(e.status == "fail" for e in entries)
    return SuiteReport(
        status="fail" if failed else "pass",
        passed=len(entries) - failed,
        failed=failed,
        entries=entries,
    )
