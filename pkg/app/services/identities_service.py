"""
Registry of q-series identities, checked by exact coefficient comparison.

Identities whose natural variable is a fractional power of q are registered in
t with q = t^r, so every entry compares two integer series in one variable.
Group entries (eq18, eq28, eq96_bracket, eq100) pass when all their members do.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from app.core.config import settings
from app.core.errors import SeriesError, UnknownIdentityError
from app.schemas.identities import IdentityInfo, IdentityReport, Mismatch
from app.services.qseries_service import (
    EtaQuotient,
    IntSeries,
    first_mismatch,
    jagged_series,
    partition_series,
    pochhammer_inf,
    series_invert,
    series_slice,
    shift,
    substitute_power,
    theta_sum,
    truncate,
)


logger = logging.getLogger(__name__)

Builder = Callable[[int], IntSeries]


@dataclass(frozen=True)
class IdentityCase:
    """Both sides of an identity as builders taking the truncation order."""

    name: str
    reference: str
    lhs: Builder
    rhs: Builder
    default_order: int = 100
    substitution: int = 1


def eta(order: int, *factors: Tuple[int, int], constant: int = 1, q_shift: int = 0) -> IntSeries:
    return EtaQuotient(constant, q_shift, tuple(factors)).evaluate(order)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _in_t(build: Builder, r: int, order: int) -> IntSeries:
    """A series in q = t^r, expanded to at least the given order in t."""
    return substitute_power(build(_ceil_div(order, r)), r)


def _j_slice(r: int, s: int) -> Builder:
    return lambda order: series_slice(jagged_series(r * order + s + 1), r, s)


# slices of J along r n + s: (constant, eta factors)
SLICE_FORMS: Dict[Tuple[int, int], Tuple[int, Tuple[Tuple[int, int], ...]]] = {
    (2, 0): (1, ((4, 5), (1, -4), (8, -2))),
    (2, 1): (2, ((2, 2), (8, 2), (1, -4), (4, -1))),
    (3, 0): (1, ((2, 4), (3, 6), (1, -8), (6, -3))),
    (3, 1): (2, ((2, 3), (3, 3), (1, -7))),
    (3, 2): (4, ((2, 2), (6, 3), (1, -6))),
    (4, 0): (1, ((2, 19), (1, -14), (4, -6))),
    (4, 1): (2, ((2, 13), (1, -12), (4, -2))),
    (4, 2): (4, ((2, 7), (4, 2), (1, -10))),
    (4, 3): (8, ((2, 1), (4, 6), (1, -8))),
}


def _eta_text(constant: int, factors: Tuple[Tuple[int, int], ...]) -> str:
    body = " ".join(f"(q^{c};q^{c})^{e}" for c, e in factors)
    return f"{constant} {body}" if constant != 1 else body


# eta quotients of the 8-dissection of 1/J
def zeta0(order: int) -> IntSeries:
    return eta(order, (4, 5), (16, 1), (2, -2), (8, -4))


def zeta1(order: int) -> IntSeries:
    return eta(order, (2, 2), (16, 1), (1, -1), (8, -2))


def zeta4(order: int) -> IntSeries:
    return eta(order, (16, 1), (4, -1))


# the corresponding factor for the 3-dissection
def zeta1_cubic(order: int) -> IntSeries:
    return eta(order, (1, 1), (6, 3), (2, -1), (3, -3))


def _eq14_rhs(order: int) -> IntSeries:
    alternating_squares = [0] * order
    n = 1
    while n * n < order:
        alternating_squares[n * n] = 1 if n % 2 else -1
        n += 1
    return 1 + 2 * jagged_series(order) * IntSeries(tuple(alternating_squares))


def _eq19_rhs(order: int) -> IntSeries:
    even = eta(order, (8, 5), (2, -4), (16, -2))
    odd = eta(order, (4, 2), (16, 2), (2, -4), (8, -1), constant=2, q_shift=1)
    return even + odd


def _eq29_rhs(order: int) -> IntSeries:
    first = _in_t(lambda n: eta(n, (3, 2), (6, -1)), 3, order)
    second = _in_t(lambda n: eta(n, (1, 1), (6, 2), (2, -1), (3, -1)), 3, order)
    return first - 2 * shift(second, 1)


def _eq30_31_lhs(order: int) -> IntSeries:
    correction = shift(_in_t(zeta1_cubic, 3, order), 1)
    return jagged_series(order) * (1 - 2 * correction)


def _eq32_33_lhs(order: int) -> IntSeries:
    z = zeta1_cubic(order)
    omega = 1 - 8 * shift(z * z * z, 1)
    return omega * eta(order, (2, 4), (3, 8), (1, -8), (6, -4))


def _eq41_rhs(order: int) -> IntSeries:
    a = _in_t(lambda n: eta(n, (8, 5), (4, -2), (16, -2)), 4, order)
    b = _in_t(lambda n: eta(n, (4, 2), (2, -1)), 4, order)
    c = _in_t(lambda n: eta(n, (16, 2), (8, -1)), 4, order)
    return a - 2 * shift(b, 1) + 2 * shift(c, 4)


def _eq42_43_lhs(order: int) -> IntSeries:
    z0 = _in_t(zeta0, 8, order)
    z1 = _in_t(zeta1, 8, order)
    z4 = _in_t(zeta4, 8, order)
    return jagged_series(order) * (z0 - 2 * shift(z1, 1) + 2 * shift(z4, 4))


def _eq47_lhs(order: int) -> IntSeries:
    return eta(order, (8, 2), (16, -1)) * _j_slice(8, 7)(order)


def _eq47_rhs(order: int) -> IntSeries:
    z0, z1, z4 = zeta0(order), zeta1(order), zeta4(order)
    bracket = 2 * z1**7 - z0**3 * z1**3 * z4 - 4 * shift(z0 * z1**3 * z4**3, 1)
    return 64 * bracket * eta(order, (2, 8), (8, 16), (1, -16), (16, -8))


def _eq48_lhs(order: int) -> IntSeries:
    z0, z1, z4 = zeta0(order), zeta1(order), zeta4(order)
    return z0**3 * z1**3 * z4 + 4 * shift(z0 * z1**3 * z4**3, 1)


def _eq96_lhs(order: int) -> IntSeries:
    z0, z4 = zeta0(order), zeta4(order)
    return eta(order, (8, 2), (16, -1)) ** 2 * (z0 * z0 + 4 * shift(z4 * z4, 1))


def _eq97_lhs(order: int) -> IntSeries:
    even = theta_sum(2, 0, False, order)
    odd = theta_sum(2, 2, False, order)
    return even * even + shift(odd * odd, 1)


def _eq100_lhs(order: int) -> IntSeries:
    z0, z1, z4 = zeta0(order), zeta1(order), zeta4(order)
    return z0 * z1**3 * z4 * (z0 * z0 + 4 * shift(z4 * z4, 1))


def _eq100_product(order: int) -> IntSeries:
    return eta(order, (2, 14), (16, 7), (1, -7), (8, -14))


def _build_registry() -> Tuple[Dict[str, IdentityCase], Dict[str, Tuple[str, ...]]]:
    cases: List[IdentityCase] = [
        IdentityCase("eq6", "J(q) theta4(q) = 1", lambda n: jagged_series(n) * theta_sum(1, 0, True, n), lambda n: IntSeries.constant(1, n)),
        IdentityCase("eq14", "J = 1 + 2 J sum_{n>=1} (-1)^(n+1) q^(n^2)", jagged_series, _eq14_rhs),
        IdentityCase(
            "eq17",
            "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6",
            lambda n: series_slice(partition_series(5 * n + 5), 5, 4),
            lambda n: eta(n, (5, 5), (1, -6), constant=5),
        ),
        IdentityCase(
            "eq19",
            "J = (q^8;q^8)^5/((q^2;q^2)^4 (q^16;q^16)^2) + 2q (q^4;q^4)^2 (q^16;q^16)^2/((q^2;q^2)^4 (q^8;q^8))",
            jagged_series,
            _eq19_rhs,
        ),
        IdentityCase("eq20", "sum j(8n+7) q^n = 64 (q^2;q^2)^22 / (q;q)^23", _j_slice(8, 7), lambda n: eta(n, (2, 22), (1, -23), constant=64)),
        IdentityCase(
            "eq29",
            "1/J(t) = (t^9;t^9)^2/(t^18;t^18) - 2t (t^3;t^3)(t^18;t^18)^2/((t^6;t^6)(t^9;t^9))",
            lambda n: series_invert(jagged_series(n)),
            _eq29_rhs,
            default_order=180,
            substitution=3,
        ),
        IdentityCase(
            "eq30_31",
            "J(t) (1 - 2t zeta1(t^3)) = J(t^9), zeta1 = (q;q)(q^6;q^6)^3/((q^2;q^2)(q^3;q^3)^3)",
            _eq30_31_lhs,
            lambda n: _in_t(jagged_series, 9, n),
            default_order=180,
            substitution=3,
        ),
        IdentityCase(
            "eq32_33",
            "(1 - 8q zeta1^3) (q^2;q^2)^4 (q^3;q^3)^8 / ((q;q)^8 (q^6;q^6)^4) = 1",
            _eq32_33_lhs,
            lambda n: IntSeries.constant(1, n),
        ),
        IdentityCase(
            "eq41",
            "1/J(t) = A(t^4) - 2t B(t^4) + 2t^4 C(t^4)",
            lambda n: series_invert(jagged_series(n)),
            _eq41_rhs,
            default_order=240,
            substitution=4,
        ),
        IdentityCase(
            "eq42_43",
            "J(t) (zeta0(t^8) - 2t zeta1(t^8) + 2t^4 zeta4(t^8)) = J(t^64)",
            _eq42_43_lhs,
            lambda n: _in_t(jagged_series, 64, n),
            default_order=480,
            substitution=8,
        ),
        IdentityCase(
            "eq47",
            "(q^8;q^8)^2/(q^16;q^16) sum j(8n+7) q^n = 64 (2 zeta1^7 - zeta0^3 zeta1^3 zeta4 - 4q zeta0 zeta1^3 zeta4^3) (q^2;q^2)^8 (q^8;q^8)^16/((q;q)^16 (q^16;q^16)^8)",
            _eq47_lhs,
            _eq47_rhs,
        ),
        IdentityCase("eq48", "zeta0^3 zeta1^3 zeta4 + 4q zeta0 zeta1^3 zeta4^3 = zeta1^7", _eq48_lhs, lambda n: zeta1(n) ** 7),
        IdentityCase(
            "eq96",
            "[(q^8;q^8)^2/(q^16;q^16)]^2 (zeta0^2 + 4q zeta4^2) = (q^2;q^2)^10 / ((q;q)^4 (q^4;q^4)^4)",
            _eq96_lhs,
            lambda n: eta(n, (2, 10), (1, -4), (4, -4)),
        ),
        IdentityCase(
            "eq97",
            "[sum q^(2n^2)]^2 + q [sum q^(2n(n+1))]^2 = [sum q^(n^2)]^2",
            _eq97_lhs,
            lambda n: theta_sum(1, 0, False, n) ** 2,
        ),
        IdentityCase(
            "eq96_bracket_even",
            "(q^4;q^4)^5 / ((q^2;q^2)^2 (q^8;q^8)^2) = sum q^(2n^2)",
            lambda n: eta(n, (4, 5), (2, -2), (8, -2)),
            lambda n: theta_sum(2, 0, False, n),
        ),
        IdentityCase(
            "eq96_bracket_odd",
            "2 (q^8;q^8)^2 / (q^4;q^4) = sum q^(2n(n+1))",
            lambda n: eta(n, (8, 2), (4, -1), constant=2),
            lambda n: theta_sum(2, 2, False, n),
        ),
        IdentityCase(
            "eq100_product",
            "zeta0 zeta1^3 zeta4 (zeta0^2 + 4q zeta4^2) = (q^2;q^2)^14 (q^16;q^16)^7 / ((q;q)^7 (q^8;q^8)^14)",
            _eq100_lhs,
            _eq100_product,
        ),
        IdentityCase(
            "eq100_zeta",
            "(q^2;q^2)^14 (q^16;q^16)^7 / ((q;q)^7 (q^8;q^8)^14) = zeta1^7",
            _eq100_product,
            lambda n: zeta1(n) ** 7,
        ),
    ]
    groups: Dict[str, Tuple[str, ...]] = {
        "eq96_bracket": ("eq96_bracket_even", "eq96_bracket_odd"),
        "eq100": ("eq100_product", "eq100_zeta"),
    }

    eq18: List[str] = []
    for (r, s), (constant, factors) in SLICE_FORMS.items():
        name = f"eq18_{r}{s}"
        eq18.append(name)
        cases.append(
            IdentityCase(
                name,
                f"sum j({r}n+{s}) q^n = {_eta_text(constant, factors)}",
                _j_slice(r, s),
                lambda n, c=constant, f=factors: eta(n, *f, constant=c),
            )
        )
    groups["eq18"] = tuple(eq18)

    eq28: List[str] = []
    for c in range(1, 9):
        name = f"eq28_{c}"
        eq28.append(name)
        cases.append(
            IdentityCase(
                name,
                f"(-q^{c};q^{c})_inf = (q^{2 * c};q^{2 * c}) / (q^{c};q^{c})",
                lambda n, c=c: pochhammer_inf(c, "+", 1, n),
                lambda n, c=c: eta(n, (2 * c, 1), (c, -1)),
            )
        )
    groups["eq28"] = tuple(eq28)
    return {case.name: case for case in cases}, groups


REGISTRY, GROUPS = _build_registry()


def list_identities() -> List[IdentityInfo]:
    infos = [
        IdentityInfo(name=c.name, reference=c.reference, default_order=c.default_order, substitution=c.substitution)
        for c in REGISTRY.values()
    ]
    infos.extend(
        IdentityInfo(name=g, reference=f"all of {', '.join(m)}", default_order=settings.default_order, members=list(m))
        for g, m in GROUPS.items()
    )
    return sorted(infos, key=lambda info: info.name)


def verify_case(case: IdentityCase, order: int | None = None) -> IdentityReport:
    order = case.default_order if order is None else order
    if order < 1:
        raise SeriesError(f"order must be >= 1, got {order}")
    lhs, rhs = case.lhs(order), case.rhs(order)
    common = min(order, lhs.order, rhs.order)
    lhs, rhs = truncate(lhs, common), truncate(rhs, common)
    exponent = first_mismatch(lhs, rhs)
    mismatch = None if exponent is None else Mismatch(exponent=exponent, lhs=lhs[exponent], rhs=rhs[exponent])
    status = "pass" if mismatch is None else "fail"
    logger.info("identity %s at order %d: %s", case.name, common, status)
    return IdentityReport(
        name=case.name,
        reference=case.reference,
        order=common,
        substitution=case.substitution,
        status=status,
        mismatch=mismatch,
    )


def _group_report(name: str, members: List[IdentityReport]) -> IdentityReport:
    failed = next((m for m in members if m.status == "fail"), None)
    return IdentityReport(
        name=name,
        reference=f"all of {', '.join(GROUPS[name])}",
        order=min(m.order for m in members),
        status="fail" if failed else "pass",
        mismatch=failed.mismatch if failed else None,
        members=members,
    )


def verify(name: str, order: int | None = None) -> IdentityReport:
    """Verify one registered identity or every member of a group."""
    if name in REGISTRY:
        return verify_case(REGISTRY[name], order)
    if name in GROUPS:
        return _group_report(name, [verify_case(REGISTRY[m], order) for m in GROUPS[name]])
    raise UnknownIdentityError(f"unknown identity {name!r}")


def top_level_names() -> List[str]:
    """Registered names with group members folded into their group."""
    grouped = {m for members in GROUPS.values() for m in members}
    return sorted([n for n in REGISTRY if n not in grouped] + list(GROUPS))


def verify_all(order: int = 1) -> List[IdentityReport]:
    """Every top-level entry at the larger of its default order and ``order``."""

    def run(case: IdentityCase) -> IdentityReport:
        return verify_case(case, max(case.default_order, order))

    reports = []
    for name in top_level_names():
        if name in GROUPS:
            reports.append(_group_report(name, [run(REGISTRY[m]) for m in GROUPS[name]]))
        else:
            reports.append(run(REGISTRY[name]))
    return reports
