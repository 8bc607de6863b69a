"""
Length-graded generating functions sum_{m, n} c(m, n) z^m q^n.

A ``BiSeries`` stores one truncated q-series per z-degree 0..z_max. Closed
product forms, nested multi-sums and fixed points of q-difference systems all
produce BiSeries, so they can be compared coefficient by coefficient with each
other and with direct enumeration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from app.core.config import settings
from app.core.errors import FamilyError, IllPosedSystemError, SeriesError
from app.schemas.genfun import BiSeriesResponse
from app.services.families_service import FamilySpec, count_partitions, enumerate_restricted, min_weight, parse_family
from app.services.qseries_service import IntSeries, pochhammer_fin, series_invert, series_mul, truncate


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class BiSeries:
    """
    Rows ``rows[m]`` hold the q-series coefficient of z^m.

    Rows may be truncated at different orders; ``q_order`` is the smallest of them.
    """

    rows: Tuple[IntSeries, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise SeriesError("a bivariate series needs at least the z^0 row")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BiSeries:
        return cls(tuple(IntSeries(tuple(row)) for row in rows))

    @classmethod
    def zero(cls, z_max: int, q_order: int) -> BiSeries:
        return cls.from_lists([[0] * q_order for _ in range(z_max + 1)])

    @classmethod
    def one(cls, z_max: int, q_order: int) -> BiSeries:
        return bi_monomial(1, 0, 0, z_max, q_order)

    @property
    def z_max(self) -> int:
        return len(self.rows) - 1

    @property
    def q_order(self) -> int:
        return min(row.order for row in self.rows)

    def coefficient(self, m: int, n: int) -> int:
        return self.rows[m][n]

    def to_lists(self) -> List[List[int]]:
        return [list(row.coeffs) for row in self.rows]

    def __add__(self, other: BiSeries) -> BiSeries:
        return bi_add(self, other)

    def __sub__(self, other: BiSeries) -> BiSeries:
        return bi_add(self, bi_scale(other, -1))

    def __mul__(self, other: BiSeries) -> BiSeries:
        return bi_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return all(a == b for a, b in zip(self.rows, other.rows))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BiSeries(z_max={self.z_max}, q_order={self.q_order})"


def _common(a: BiSeries, b: BiSeries) -> Tuple[int, int]:
    return min(a.z_max, b.z_max), min(a.q_order, b.q_order)


def bi_monomial(coeff: int, z_pow: int, q_pow: int, z_max: int, q_order: int) -> BiSeries:
    rows = [[0] * q_order for _ in range(z_max + 1)]
    if z_pow <= z_max and q_pow < q_order:
        rows[z_pow][q_pow] = coeff
    return BiSeries.from_lists(rows)


def bi_add(a: BiSeries, b: BiSeries) -> BiSeries:
    z_max, order = _common(a, b)
    return BiSeries.from_lists(
        [[x + y for x, y in zip(a.rows[m].coeffs[:order], b.rows[m].coeffs[:order])] for m in range(z_max + 1)]
    )


def bi_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    z_max, order = _common(a, b)
    out = [[0] * order for _ in range(z_max + 1)]
    for i in range(z_max + 1):
        left = a.rows[i]
        if not any(left.coeffs[:order]):
            continue
        for j in range(z_max + 1 - i):
            product = series_mul(left, b.rows[j])
            target = out[i + j]
            for n in range(order):
                target[n] += product.coeffs[n]
    return BiSeries.from_lists(out)


def bi_scale(a: BiSeries, coeff: int, z_pow: int = 0, q_pow: int = 0) -> BiSeries:
    """Multiply by the monomial coeff * z^z_pow * q^q_pow."""
    if z_pow < 0 or q_pow < 0:
        raise SeriesError("monomial powers must be non-negative")
    order = a.q_order
    out = [[0] * order for _ in range(a.z_max + 1)]
    for m in range(z_pow, a.z_max + 1):
        source = a.rows[m - z_pow].coeffs
        target = out[m]
        for n in range(q_pow, order):
            target[n] = coeff * source[n - q_pow]
    return BiSeries.from_lists(out)


def dilate(a: BiSeries, k: int) -> BiSeries:
    """F(z) -> F(z q^k): row m moves up by q^(k m)."""
    if k < 0:
        raise SeriesError(f"dilation must be non-negative, got {k}")
    if k == 0:
        return a
    order = a.q_order
    out = []
    for m, row in enumerate(a.rows):
        offset = k * m
        out.append([0] * min(offset, order) + list(row.coeffs[: max(order - offset, 0)]))
    return BiSeries.from_lists(out)


# (z-power a, first q-power, q-step, c, divide): the infinite product over k >= 0 of
# (1 + c z^a q^(first + step k)), or its reciprocal when divide is set.
ProductFactor = Tuple[int, int, int, int, bool]

CLOSED_FORMS: Dict[str, Tuple[ProductFactor, ...]] = {
    # (-zq; q)_inf / (z^2 q; q)_inf
    "01": ((1, 1, 1, 1, False), (2, 1, 1, -1, True)),
    # (-zq; q)_inf / (z^2 q^2; q)_inf
    "01K": ((1, 1, 1, 1, False), (2, 2, 1, -1, True)),
    # (z^3 q^6; q^3)_inf / ((z q^2; q)_inf (z^2 q^2; q)_inf)
    "02": ((3, 6, 3, -1, False), (1, 2, 1, -1, True), (2, 2, 1, -1, True)),
    # (-z q^2; q)_inf (-z^2 q^3; q)_inf / (z^3 q^3; q)_inf
    "012": ((1, 2, 1, 1, False), (2, 3, 1, 1, False), (3, 3, 1, -1, True)),
    # (-z^2 q; q^2)_inf / ((z q; q)_inf (z^3 q; q^3)_inf (z^3 q^2; q^3)_inf)
    "001": ((2, 1, 2, 1, False), (1, 1, 1, -1, True), (3, 1, 3, -1, True), (3, 2, 3, -1, True)),
}


def _apply_factor(rows: List[List[int]], a: int, b: int, c: int, divide: bool) -> None:
    z_max = len(rows) - 1
    order = len(rows[0])
    if a > z_max or b >= order:
        return
    if divide:
        # new[m] = old[m] - c q^b new[m - a], lower rows first
        for m in range(a, z_max + 1):
            source, target = rows[m - a], rows[m]
            for n in range(b, order):
                target[n] -= c * source[n - b]
    else:
        for m in range(z_max, a - 1, -1):
            source, target = rows[m - a], rows[m]
            for n in range(b, order):
                target[n] += c * source[n - b]


def closed_form(family: str, z_max: int | None = None, q_order: int | None = None) -> BiSeries:
    """Expand the product form of a family's generating function; ``01K`` is the no-zero-part variant."""
    z_max = settings.default_zmax if z_max is None else z_max
    q_order = settings.default_qorder if q_order is None else q_order
    factors = CLOSED_FORMS.get(family)
    if factors is None:
        raise FamilyError(f"no closed form for family {family!r}; known: {', '.join(CLOSED_FORMS)}")
    rows = [[0] * q_order for _ in range(z_max + 1)]
    rows[0][0] = 1
    for a, first, step, c, divide in factors:
        b = first
        while b < q_order:
            _apply_factor(rows, a, b, c, divide)
            b += step
    return BiSeries.from_lists(rows)


def family_series(spec: FamilySpec, z_max: int | None = None, q_order: int | None = None) -> BiSeries:
    """Coefficients counted by direct enumeration of the family."""
    z_max = settings.default_zmax if z_max is None else z_max
    q_order = settings.default_qorder if q_order is None else q_order
    rows = [[0] * q_order for _ in range(z_max + 1)]
    rows[0][0] = 1
    for m in range(1, z_max + 1):
        for n in range(min_weight(spec, m), q_order):
            rows[m][n] = count_partitions(spec, n, m)
    return BiSeries.from_lists(rows)


def staircase_transform(a: BiSeries, sigma: Callable[[int], int]) -> BiSeries:
    """
    Replace z^m by z^m q^sigma(m), row by row.

    A row shifted by q^-k must vanish below q^k and comes out k coefficients shorter;
    the other rows keep their order.
    """
    out = []
    for m, row in enumerate(a.rows):
        s = sigma(m)
        if s < 0:
            if any(row.coeffs[:-s]):
                raise SeriesError(f"row {m}: shift by q^{s} moves nonzero coefficients below q^0")
            if row.order + s < 1:
                raise SeriesError(f"row {m}: shift by q^{s} leaves no coefficients")
            out.append(list(row.coeffs[-s:]))
        else:
            out.append([0] * min(s, row.order) + list(row.coeffs[: max(row.order - s, 0)]))
    return BiSeries.from_lists(out)


def family_transform(a: BiSeries, spec: FamilySpec) -> BiSeries:
    """Staircase transform with the family's own weight shift."""
    return staircase_transform(a, spec.sigma)


def bi_truncate(a: BiSeries, q_order: int) -> BiSeries:
    """Cut every row down to ``q_order``."""
    return BiSeries(tuple(truncate(row, q_order) for row in a.rows))


@dataclass(frozen=True, slots=True)
class Term:
    """coeff * z^z_pow * q^q_pow * unknown(z q^dilation)."""

    coeff: int
    z_pow: int
    q_pow: int
    unknown: str
    dilation: int = 0


@dataclass(frozen=True)
class QDiffSystem:
    """
    Linear q-difference equations ``X = sum of terms`` for each unknown X.

    Every unknown starts from the constant 1 (the empty partition); ``ground`` names
    the unknown whose solution is the generating function of interest.
    """

    name: str
    ground: str
    equations: Dict[str, Tuple[Term, ...]]

    @property
    def unknowns(self) -> Tuple[str, ...]:
        return tuple(self.equations)


def _check_system(system: QDiffSystem) -> None:
    if system.ground not in system.equations:
        raise IllPosedSystemError(f"{system.name}: ground unknown {system.ground!r} has no equation")
    plain: Dict[str, List[str]] = {u: [] for u in system.equations}
    for unknown, terms in system.equations.items():
        for term in terms:
            if term.unknown not in system.equations:
                raise IllPosedSystemError(f"{system.name}: {unknown} refers to undefined unknown {term.unknown!r}")
            if term.z_pow < 0 or term.q_pow < 0 or term.dilation < 0:
                raise IllPosedSystemError(f"{system.name}: negative power in the equation for {unknown}")
            if term.z_pow == 0 and term.q_pow == 0 and term.dilation == 0:
                plain[unknown].append(term.unknown)

    # weightless undilated references must not form a cycle
    state: Dict[str, int] = {}

    def visit(node: str) -> None:
        state[node] = 1
        for nxt in plain[node]:
            if state.get(nxt) == 1:
                raise IllPosedSystemError(f"{system.name}: weightless cycle through {node} and {nxt}")
            if nxt not in state:
                visit(nxt)
        state[node] = 2

    for node in plain:
        if node not in state:
            visit(node)


def qdiff_solve(system: QDiffSystem, z_max: int | None = None, q_order: int | None = None) -> Dict[str, BiSeries]:
    """Fixed point of the system by whole-system iteration at the given truncation."""
    z_max = settings.default_zmax if z_max is None else z_max
    q_order = settings.default_qorder if q_order is None else q_order
    _check_system(system)
    current = {u: BiSeries.one(z_max, q_order) for u in system.unknowns}
    limit = len(current) * ((z_max + 1) * (q_order + 1) + 1)
    for iteration in range(1, limit + 1):
        nxt: Dict[str, BiSeries] = {}
        for unknown, terms in system.equations.items():
            total = BiSeries.zero(z_max, q_order)
            for term in terms:
                value = dilate(current[term.unknown], term.dilation)
                total = bi_add(total, bi_scale(value, term.coeff, term.z_pow, term.q_pow))
            nxt[unknown] = total
        if all(nxt[u] == current[u] for u in current):
            logger.debug("system %s converged after %d iterations at (%d, %d)", system.name, iteration, z_max, q_order)
            return nxt
        current = nxt
    raise IllPosedSystemError(f"{system.name}: no fixed point after {limit} iterations")


def _system(name: str, ground: str, equations: Dict[str, List[Tuple[int, int, int, str, int]]]) -> QDiffSystem:
    return QDiffSystem(name, ground, {u: tuple(Term(*t) for t in terms) for u, terms in equations.items()})


SYSTEMS: Dict[str, QDiffSystem] = {
    "01": _system(
        "01",
        "J",
        {
            "J": [(1, 2, 1, "J", 0), (1, 0, 0, "K", 0)],
            "K": [(1, 1, 1, "K", 0), (1, 0, 0, "J", 1)],
        },
    ),
    "02": _system(
        "02",
        "J",
        {
            "J": [(1, 2, 2, "J", 0), (1, 0, 0, "K", 0)],
            "K": [(1, 2, 3, "K", 0), (1, 0, 0, "L", 0), (1, 2, 4, "J", 1)],
            "L": [(1, 1, 2, "L", 0), (1, 0, 0, "K", 1)],
        },
    ),
    "012": _system(
        "012",
        "J",
        {
            "J": [(1, 3, 3, "J", 0), (1, 0, 0, "K", 0)],
            "K": [(1, 3, 4, "K", 0), (1, 2, 3, "L", 0), (1, 0, 0, "L", 0)],
            "L": [(1, 1, 2, "M", 0), (1, 0, 0, "J", 1)],
            "M": [(1, 2, 3, "L", 0), (1, 0, 0, "N", 0)],
            "N": [(1, 1, 2, "N", 0), (1, 0, 0, "K", 1)],
        },
    ),
    "001": _system(
        "001",
        "J",
        {
            "J": [(1, 3, 1, "J", 0), (1, 2, 1, "K", 0), (1, 0, 0, "K", 0)],
            "K": [(1, 3, 2, "K", 0), (1, 0, 0, "L", 0)],
            "L": [(1, 1, 1, "L", 0), (1, 0, 0, "J", 1)],
        },
    ),
    # restricted 01 partitions after the staircase, as a third-order system
    "01-restricted": _system(
        "01-restricted",
        "A",
        {
            "A": [(1, 0, 0, "A", 1), (1, 1, 1, "B", 0)],
            "B": [(1, 1, 1, "A", 2), (1, 0, 0, "C", 0)],
            "C": [(1, 0, 0, "A", 2), (1, 1, 2, "C", 1)],
        },
    ),
    # the same function from its single third-order relation
    "01-restricted-single": _system(
        "01-restricted-single",
        "A",
        {
            "A": [(1, 0, 0, "A", 1), (1, 1, 1, "A", 1), (1, 2, 2, "A", 2), (-1, 3, 5, "A", 3)],
        },
    ),
}


def solve_family(name: str, z_max: int | None = None, q_order: int | None = None) -> BiSeries:
    system = SYSTEMS.get(name)
    if system is None:
        raise FamilyError(f"no q-difference system named {name!r}; known: {', '.join(SYSTEMS)}")
    return qdiff_solve(system, z_max, q_order)[system.ground]


@lru_cache(maxsize=64)
def _inverse_pochhammer(c: int, m: int, order: int) -> IntSeries:
    return series_invert(pochhammer_fin(c, m, order))


@dataclass(frozen=True)
class MultiSum:
    """z-weight and denominator step per index, and the q-exponent of a term from its indices and z-degree."""

    name: str
    z_weights: Tuple[int, ...]
    steps: Tuple[int, ...]
    exponent: Callable[[Tuple[int, ...], int], int]
    sign: Callable[[Tuple[int, ...]], int] = lambda idx: 1


def _sum02_exponent(i: Tuple[int, ...], M: int) -> int:
    return 2 * i[0] + 2 * i[1] + 3 * i[2] * (i[2] + 3) // 2


def _sum012_exponent(i: Tuple[int, ...], M: int) -> int:
    return i[0] * (i[0] + 3) // 2 + i[1] * (i[1] + 5) // 2 + 3 * i[2]


MULTISUMS: Dict[str, MultiSum] = {
    "sum-01-restricted": MultiSum("sum-01-restricted", (1, 2), (1, 1), lambda i, M: (i[0] + i[1]) ** 2 + i[1] ** 2),
    "sum-02": MultiSum("sum-02", (1, 2, 3), (1, 1, 3), _sum02_exponent, lambda i: -1 if i[2] % 2 else 1),
    "sum-02-restricted": MultiSum(
        "sum-02-restricted", (1, 2, 3), (1, 1, 3), lambda i, M: _sum02_exponent(i, M) + M * (M - 2), lambda i: -1 if i[2] % 2 else 1
    ),
    "sum-012": MultiSum("sum-012", (1, 2, 3), (1, 1, 1), _sum012_exponent),
    "sum-012-restricted": MultiSum(
        "sum-012-restricted", (1, 2, 3), (1, 1, 1), lambda i, M: _sum012_exponent(i, M) + M * (M - 3) // 2
    ),
    "sum-001-restricted": MultiSum(
        "sum-001-restricted",
        (2, 1, 3, 3),
        (2, 1, 3, 3),
        lambda i, M: i[0] ** 2 + i[1] + i[2] + 2 * i[3] + M * (M - 1) // 2,
    ),
}


def _indices(z_weights: Tuple[int, ...], budget: int) -> Iterator[Tuple[int, ...]]:
    if not z_weights:
        yield ()
        return
    head, rest = z_weights[0], z_weights[1:]
    for k in range(budget // head + 1):
        for tail in _indices(rest, budget - head * k):
            yield (k,) + tail


def multisum(name: str, z_max: int | None = None, q_order: int | None = None) -> BiSeries:
    """
    Expand a nested sum of ``sign * q^exponent * z^degree / prod (q^c; q^c)_{m_i}``.

    Indices are cut by the z-degree bound; terms whose exponent reaches the
    q-order contribute nothing.
    """
    z_max = settings.default_zmax if z_max is None else z_max
    q_order = settings.default_qorder if q_order is None else q_order
    spec = MULTISUMS.get(name)
    if spec is None:
        raise SeriesError(f"unknown multi-sum {name!r}; known: {', '.join(MULTISUMS)}")
    rows = [[0] * q_order for _ in range(z_max + 1)]
    for idx in _indices(spec.z_weights, z_max):
        degree = sum(w * k for w, k in zip(spec.z_weights, idx))
        exponent = spec.exponent(idx, degree)
        if exponent < 0:
            raise SeriesError(f"{name}: negative q-exponent at indices {idx}")
        if exponent >= q_order:
            continue
        width = q_order - exponent
        term = IntSeries.constant(spec.sign(idx), width)
        for c, k in zip(spec.steps, idx):
            if k:
                term = series_mul(term, _inverse_pochhammer(c, k, width))
        target = rows[degree]
        for n, value in enumerate(term.coeffs):
            target[exponent + n] += value
    return BiSeries.from_lists(rows)


def restricted_series(conditions: Sequence[Tuple[int, int]], z_max: int, q_order: int) -> BiSeries:
    """Ordinary partitions with difference conditions, counted by length and weight."""
    rows = [[0] * q_order for _ in range(z_max + 1)]
    rows[0][0] = 1
    for m in range(1, z_max + 1):
        for n in range(m, q_order):
            rows[m][n] = len(enumerate_restricted(conditions, n, m))
    return BiSeries.from_lists(rows)


def series_report(
    family: str,
    source: str = "closed_form",
    z_max: int | None = None,
    q_order: int | None = None,
    staircase: bool = False,
) -> BiSeriesResponse:
    """
    Build a family's bivariate series from the requested source.

    ``multisum`` takes a multi-sum name as ``family``; ``qdiff`` takes a system name.
    The staircase shift needs a family, so it is not available for those two. With the
    shift, the source is built deep enough that every row still reaches ``q_order``.
    """
    z_max = settings.default_zmax if z_max is None else z_max
    q_order = settings.default_qorder if q_order is None else q_order
    depth = q_order
    spec = None
    if staircase:
        if source in ("qdiff", "multisum"):
            raise SeriesError(f"the staircase shift applies to families, not to {source} entries")
        spec = parse_family(family.removesuffix("K"))
        depth += max(0, -min(spec.sigma(m) for m in range(z_max + 1)))
    if source == "closed_form":
        series = closed_form(family, z_max, depth)
    elif source == "enumeration":
        series = family_series(parse_family(family), z_max, depth)
    elif source == "qdiff":
        series = solve_family(family, z_max, depth)
    elif source == "multisum":
        series = multisum(family, z_max, depth)
    else:
        raise SeriesError(f"unknown series source {source!r}")
    if spec is not None:
        series = bi_truncate(family_transform(series, spec), q_order)
    return BiSeriesResponse(
        family=family,
        source=source,
        staircase=staircase,
        z_max=series.z_max,
        q_order=series.q_order,
        rows=series.to_lists(),
    )
