"""
Exact truncated power series in q with integer coefficients.

An ``IntSeries`` knows its coefficients for the exponents ``0 .. order-1``;
anything beyond is unknown. Binary operations truncate to the smaller order,
and comparisons are made up to the common order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Union

from app.core.errors import SeriesError


logger = logging.getLogger(__name__)

Sign = Literal["+", "-"]
SeriesLike = Union["IntSeries", int]


@dataclass(frozen=True, slots=True, eq=False)
class IntSeries:
    """Truncated power series; ``coeffs[k]`` is the coefficient of q^k."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesError("a series needs a positive truncation order")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int | None = None) -> IntSeries:
        values = list(coeffs)
        if order is not None:
            values = values[:order] + [0] * (order - len(values))
        return cls(tuple(values))

    @classmethod
    def constant(cls, value: int, order: int) -> IntSeries:
        return cls.monomial(0, order, value)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> IntSeries:
        if order < 1:
            raise SeriesError("a series needs a positive truncation order")
        values = [0] * order
        if 0 <= exponent < order:
            values[exponent] = coeff
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient of q^{k} is outside the truncation order {self.order}")
        return self.coeffs[k]

    def __add__(self, other: SeriesLike) -> IntSeries:
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: SeriesLike) -> IntSeries:
        return series_sub(self, _coerce(other, self.order))

    def __rsub__(self, other: SeriesLike) -> IntSeries:
        return series_sub(_coerce(other, self.order), self)

    def __neg__(self) -> IntSeries:
        return series_scale(self, -1)

    def __mul__(self, other: SeriesLike) -> IntSeries:
        if isinstance(other, int):
            return series_scale(self, other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntSeries:
        return series_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return first_mismatch(self, other) is None

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"IntSeries([{shown}{tail}], order={self.order})"


@dataclass(frozen=True, slots=True)
class EtaQuotient:
    """``constant * q**q_shift * prod((q^c; q^c)_inf ** e for c, e in factors)``."""

    constant: int = 1
    q_shift: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not self.factors and self.constant == 0:
            raise SeriesError("an eta quotient needs factors or a nonzero constant")
        if self.q_shift < 0:
            raise SeriesError("q_shift must be non-negative")
        for c, _ in self.factors:
            if c < 1:
                raise SeriesError(f"eta factor step must be >= 1, got {c}")

    def evaluate(self, order: int) -> IntSeries:
        return eval_eta(self, order)


def _coerce(value: SeriesLike, order: int) -> IntSeries:
    if isinstance(value, IntSeries):
        return value
    return IntSeries.constant(value, order)


def series_add(a: IntSeries, b: IntSeries) -> IntSeries:
    n = min(a.order, b.order)
    return IntSeries(tuple(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def series_sub(a: IntSeries, b: IntSeries) -> IntSeries:
    n = min(a.order, b.order)
    return IntSeries(tuple(x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def series_scale(a: IntSeries, factor: int) -> IntSeries:
    return IntSeries(tuple(factor * c for c in a.coeffs))


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Truncated Cauchy product; zero coefficients are skipped on both sides."""
    n = min(a.order, b.order)
    left = [(i, c) for i, c in enumerate(a.coeffs[:n]) if c]
    right = [(j, c) for j, c in enumerate(b.coeffs[:n]) if c]
    if len(left) > len(right):
        left, right = right, left
    out = [0] * n
    for i, ci in left:
        for j, cj in right:
            k = i + j
            if k >= n:
                break
            out[k] += ci * cj
    return IntSeries(tuple(out))


def series_invert(a: IntSeries) -> IntSeries:
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise SeriesError(f"only series with constant term +1 or -1 are invertible over the integers, got {a0}")
    terms = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    out = [0] * a.order
    out[0] = a0
    for n in range(1, a.order):
        acc = 0
        for k, c in terms:
            if k > n:
                break
            acc += c * out[n - k]
        out[n] = -a0 * acc
    return IntSeries(tuple(out))


def series_pow(a: IntSeries, exponent: int) -> IntSeries:
    """
    Integer power of a series.

    Unit constant terms use the recurrence ``n a0 b_n = sum_k ((e+1)k - n) a_k b_{n-k}``,
    which handles negative exponents and costs one pass over the nonzero terms of ``a``.
    """
    if exponent == 0:
        return IntSeries.constant(1, a.order)
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        if exponent < 0:
            raise SeriesError("negative powers need a constant term of +1 or -1")
        return _pow_by_squaring(a, exponent)
    terms = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    out = [0] * a.order
    out[0] = a0 ** abs(exponent)
    for n in range(1, a.order):
        acc = 0
        for k, c in terms:
            if k > n:
                break
            acc += ((exponent + 1) * k - n) * c * out[n - k]
        value, rem = divmod(acc, n)
        if rem:
            raise SeriesError("non-integral coefficient while raising a series to a power")
        out[n] = a0 * value
    return IntSeries(tuple(out))


def _pow_by_squaring(a: IntSeries, exponent: int) -> IntSeries:
    result = IntSeries.constant(1, a.order)
    base = a
    while exponent:
        if exponent & 1:
            result = series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result


def shift(a: IntSeries, k: int) -> IntSeries:
    """Multiply by q^k, keeping the order."""
    if k < 0:
        raise SeriesError("negative powers of q are not represented")
    if k == 0:
        return a
    return IntSeries.from_coeffs([0] * k + list(a.coeffs), a.order)


def truncate(a: IntSeries, order: int) -> IntSeries:
    if not 1 <= order <= a.order:
        raise SeriesError(f"cannot truncate a series of order {a.order} to order {order}")
    return IntSeries(a.coeffs[:order])


def first_mismatch(a: IntSeries, b: IntSeries) -> int | None:
    for k, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return k
    return None


def pochhammer_inf(c: int, sign: Sign, exponent_power: int, order: int) -> IntSeries:
    """(-q^c; q^c)_inf ** e for sign '+', (q^c; q^c)_inf ** e for sign '-'."""
    if c < 1:
        raise SeriesError(f"step must be >= 1, got {c}")
    step = 1 if sign == "+" else -1
    out = [0] * order
    out[0] = 1
    for base in range(c, order, c):
        for i in range(order - 1, base - 1, -1):
            out[i] += step * out[i - base]
    series = IntSeries(tuple(out))
    if exponent_power < 0:
        series = series_invert(series)
    return series_pow(series, abs(exponent_power))


def pochhammer_fin(c: int, m: int, order: int) -> IntSeries:
    """(q^c; q^c)_m."""
    out = [0] * order
    out[0] = 1
    for k in range(1, m + 1):
        base = c * k
        if base >= order:
            break
        for i in range(order - 1, base - 1, -1):
            out[i] -= out[i - base]
    return IntSeries(tuple(out))


def euler_product(c: int, order: int) -> IntSeries:
    """(q^c; q^c)_inf from the pentagonal numbers: sum (-1)^k q^(c k(3k-1)/2)."""
    out = [0] * order
    out[0] = 1
    k = 1
    while c * k * (3 * k - 1) // 2 < order:
        sign = -1 if k % 2 else 1
        out[c * k * (3 * k - 1) // 2] += sign
        plus = c * k * (3 * k + 1) // 2
        if plus < order:
            out[plus] += sign
        k += 1
    return IntSeries(tuple(out))


def theta_sum(a: int, b: int, alternating: bool, order: int) -> IntSeries:
    """sum over all integers n of s(n) q^(a n^2 + b n), s(n) = (-1)^n if alternating."""
    if a < 1 or abs(b) > a:
        raise SeriesError(f"theta sum needs a >= 1 and |b| <= a, got a={a}, b={b}")
    out = [0] * order
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            exponent = a * n * n + b * n
            if exponent >= order and n not in (0, -1):
                break
            if exponent < order:
                out[exponent] += -1 if alternating and n % 2 else 1
            n += direction
    return IntSeries(tuple(out))


def eval_eta(spec: EtaQuotient, order: int) -> IntSeries:
    merged: dict[int, int] = {}
    for c, e in spec.factors:
        merged[c] = merged.get(c, 0) + e
    result = IntSeries.constant(spec.constant, order)
    for c, e in sorted(merged.items()):
        if e:
            result = series_mul(result, series_pow(euler_product(c, order), e))
    return shift(result, spec.q_shift)


def substitute_power(a: IntSeries, k: int) -> IntSeries:
    """a(q^k); the order grows to k * order."""
    if k < 1:
        raise SeriesError(f"substitution power must be >= 1, got {k}")
    out = [0] * (k * a.order)
    out[::k] = a.coeffs
    return IntSeries(tuple(out))


def series_slice(a: IntSeries, r: int, s: int) -> IntSeries:
    """Coefficients along the progression r n + s: b_n = a_{r n + s}."""
    if r < 1 or not 0 <= s < r:
        raise SeriesError(f"slice needs r >= 1 and 0 <= s < r, got r={r}, s={s}")
    if a.order <= s:
        raise SeriesError(f"a series of order {a.order} has no coefficient at q^{s}")
    return IntSeries(a.coeffs[s::r])


@lru_cache(maxsize=32)
def jagged_series(order: int) -> IntSeries:
    """J(q) = (-q; q)_inf / (q; q)_inf = (q^2; q^2)_inf / (q; q)_inf^2."""
    return eval_eta(EtaQuotient(factors=((2, 1), (1, -2))), order)


@lru_cache(maxsize=32)
def partition_series(order: int) -> IntSeries:
    """P(q) = 1 / (q; q)_inf."""
    return series_pow(euler_product(1, order), -1)


@lru_cache(maxsize=32)
def distinct_partition_series(order: int) -> IntSeries:
    """D(q) = (-q; q)_inf."""
    return pochhammer_inf(1, "+", 1, order)
