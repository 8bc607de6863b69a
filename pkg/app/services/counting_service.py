"""
Scalar counting for jagged partitions.

j(n) is available three ways (the sum-of-squares recurrence, the convolution of
ordinary and distinct partition numbers, and the coefficients of the product
form) so that each can be checked against the others. The congruence helpers
predict and test powers of two dividing j along arithmetic progressions.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from app.core.config import settings
from app.core.errors import CountingError
from app.schemas.counting import CongruencePrediction, CongruenceReport, Counterexample, CountResponse, SquaresBreakdown
from app.schemas.series import SliceResponse
from app.services.families_service import F01, enumerate_partitions
from app.services.qseries_service import distinct_partition_series, jagged_series, partition_series, series_slice


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CountTable:
    """Exact values of one counting function, keyed by their index tuple."""

    kind: str
    values: Dict[Tuple[int, ...], int]

    def __getitem__(self, index: int | Tuple[int, ...]) -> int:
        key = index if isinstance(index, tuple) else (index,)
        return self.values[key]

    def as_list(self) -> List[int]:
        """Values of a one-index table in index order."""
        return [self.values[(n,)] for n in range(len(self.values))]


def _linear(kind: str, values: List[int] | Tuple[int, ...]) -> CountTable:
    return CountTable(kind, {(n,): v for n, v in enumerate(values)})


def _check_size(N: int) -> None:
    if N < 0:
        raise CountingError(f"table size must be non-negative, got {N}")


@lru_cache(maxsize=8)
def j_table(N: int) -> Tuple[int, ...]:
    """j(0..N) from j(n) = 2 sum_{m >= 1} (-1)^(m+1) j(n - m^2)."""
    _check_size(N)
    values = [0] * (N + 1)
    values[0] = 1
    for n in range(1, N + 1):
        acc = 0
        m = 1
        while m * m <= n:
            acc += values[n - m * m] if m % 2 else -values[n - m * m]
            m += 1
        values[n] = 2 * acc
    logger.debug("built j-table up to %d", N)
    return tuple(values)


def jagged_count(n: int) -> int:
    if n < 0:
        raise CountingError(f"n must be non-negative, got {n}")
    return j_table(n)[n]


def j_by_recurrence(N: int) -> CountTable:
    return _linear("j(n)", j_table(N))


def p_table(N: int) -> CountTable:
    _check_size(N)
    return _linear("p(n)", partition_series(N + 1).coeffs)


def d_table(N: int) -> CountTable:
    _check_size(N)
    return _linear("d(n)", distinct_partition_series(N + 1).coeffs)


def j_by_convolution(N: int) -> CountTable:
    """j(n) = sum_m p(n - m) d(m)."""
    _check_size(N)
    p = p_table(N).as_list()
    d = d_table(N).as_list()
    return _linear("j(n)", [sum(p[n - m] * d[m] for m in range(n + 1)) for n in range(N + 1)])


def j_by_series(N: int) -> CountTable:
    _check_size(N)
    return _linear("j(n)", jagged_series(N + 1).coeffs)


def j_by_squares(n: int) -> SquaresBreakdown:
    """
    Expand j(n) over ordered sums of positive squares.

    Each representation n = n_1^2 + ... + n_p^2 contributes 2^p (-1)^(sum (n_i + 1)).
    The signed count for every p is built by repeated convolution with the
    single-square series.
    """
    if n < 1:
        raise CountingError(f"n must be >= 1, got {n}")
    single = [0] * (n + 1)
    k = 1
    while k * k <= n:
        single[k * k] = 1 if k % 2 else -1
        k += 1
    single_terms = [(i, c) for i, c in enumerate(single) if c]

    terms: Dict[int, int] = {}
    current = single
    for p in range(1, n + 1):
        if current[n]:
            terms[p] = current[n]
        nxt = [0] * (n + 1)
        for i, ci in enumerate(current):
            if not ci:
                continue
            for j, cj in single_terms:
                if i + j > n:
                    break
                nxt[i + j] += ci * cj
        current = nxt
    total = sum(2**p * c for p, c in terms.items())
    return SquaresBreakdown(n=n, terms=terms, total=total)


@lru_cache(maxsize=8)
def _p_mn_table(M: int, N: int) -> Tuple[Tuple[int, ...], ...]:
    rows = [[0] * (N + 1) for _ in range(M + 1)]
    rows[0][0] = 1
    for m in range(1, M + 1):
        for n in range(m, N + 1):
            rows[m][n] = rows[m - 1][n - 1] + rows[m][n - m]
    return tuple(tuple(row) for row in rows)


def p_mn(m: int, n: int) -> int:
    """Partitions of n into exactly m parts: p(m, n) = p(m-1, n-1) + p(m, n-m)."""
    if m < 0 or n < 0:
        raise CountingError(f"p(m, n) needs m, n >= 0, got m={m}, n={n}")
    return _p_mn_table(m, n)[m][n]


def jk_tables(M: int, N: int) -> Tuple[CountTable, CountTable]:
    """
    01-partitions of n with exactly m parts (j) and those without a zero part (k).

    Coupled recurrences j(m, n) = j(m-2, n-1) + k(m, n) and
    k(m, n) = k(m-1, n-1) + j(m, n-m), with j(0, 0) = k(0, 0) = 1.
    """
    if M < 0 or N < 0:
        raise CountingError(f"table bounds must be non-negative, got M={M}, N={N}")
    j = [[0] * (N + 1) for _ in range(M + 1)]
    k = [[0] * (N + 1) for _ in range(M + 1)]
    j[0][0] = k[0][0] = 1
    for m in range(1, M + 1):
        for n in range(N + 1):
            kv = (k[m - 1][n - 1] if n >= 1 else 0) + (j[m][n - m] if n >= m else 0)
            k[m][n] = kv
            j[m][n] = (j[m - 2][n - 1] if m >= 2 and n >= 1 else 0) + kv
    j_values = {(m, n): j[m][n] for m in range(M + 1) for n in range(N + 1)}
    k_values = {(m, n): k[m][n] for m in range(M + 1) for n in range(N + 1)}
    return CountTable("j(m,n)", j_values), CountTable("k(m,n)", k_values)


def j_at_most(m: int, n: int) -> int:
    """01-partitions of n with at most m parts, from j(m, n+m) - j(m-2, n+m-1) and from k(m, n+m)."""
    if m < 0 or n < 0:
        raise CountingError(f"j_m(n) needs m, n >= 0, got m={m}, n={n}")
    j, k = jk_tables(m, n + m)
    by_difference = j[m, n + m] - (j[m - 2, n + m - 1] if m >= 2 else 0)
    by_k = k[m, n + m]
    if by_difference != by_k:
        raise CountingError(f"j_{m}({n}): the two formulas disagree ({by_difference} != {by_k})")
    return by_k


def ramanujan_estimate(n: int) -> float:
    """(cosh(pi sqrt n) - sinh(pi sqrt n) / (pi sqrt n)) / (4 n)."""
    if n < 1:
        raise CountingError(f"n must be >= 1, got {n}")
    x = math.pi * math.sqrt(n)
    return (math.cosh(x) - math.sinh(x) / x) / (4 * n)


@lru_cache(maxsize=8)
def min_squares_table(N: int) -> Tuple[int, ...]:
    """Least number of positive squares summing to each n <= N; entry 0 is 0."""
    _check_size(N)
    best = [0] + [N + 1] * N
    for n in range(1, N + 1):
        k = 1
        while k * k <= n:
            candidate = best[n - k * k] + 1
            if candidate < best[n]:
                best[n] = candidate
            k += 1
    return tuple(best)


def min_squares(n: int) -> int:
    if n < 1:
        raise CountingError(f"n must be >= 1, got {n}")
    return min_squares_table(n)[n]


def two_square_count(n: int) -> int:
    """Ordered pairs (a, b) of integers of any sign with a^2 + b^2 = n."""
    if n < 0:
        raise CountingError(f"n must be non-negative, got {n}")
    count = 0
    a = -math.isqrt(n)
    while a * a <= n:
        rest = n - a * a
        b = math.isqrt(rest)
        if b * b == rest:
            count += 1 if b == 0 else 2
        a += 1
    return count


def _residue_tuples(residues: List[int], length: int, r: int) -> List[int]:
    """ways[x] = ordered tuples of the given residues of the given length summing to x mod r."""
    ways = [0] * r
    ways[0] = 1
    for _ in range(length):
        nxt = [0] * r
        for x, w in enumerate(ways):
            if w:
                for res in residues:
                    nxt[(x + res) % r] += w
        ways = nxt
    return ways


def congruence_predict(r: int, s: int, window: int | None = None) -> CongruencePrediction:
    """
    Predict a power of two (times 1, 2 or 4) dividing j(r n + s) for all n.

    p' is the least number of squares over the first ``window`` terms of the
    progression; c counts ordered p'-tuples of nonzero square residues mod r
    reaching s mod r. The factor a starts from min(c, 2), or min(c, 4) when no
    (p' + 1)-tuple reaches s, and is lowered until a 2^p' divides every
    inspected j value.
    """
    if window is None:
        window = settings.congruence_window
    if r < 2 or not 1 <= s < r:
        raise CountingError(f"progression needs r >= 2 and 1 <= s < r, got r={r}, s={s}")
    if window < 1:
        raise CountingError(f"window must be >= 1, got {window}")
    arguments = [r * n + s for n in range(window)]
    squares = min_squares_table(arguments[-1])
    p_prime = min(squares[a] for a in arguments)

    residues = sorted({(m * m) % r for m in range(r)} - {0})
    c = _residue_tuples(residues, p_prime, r)[s % r]
    upgraded = _residue_tuples(residues, p_prime + 1, r)[s % r] == 0
    cap = min(c, 4 if upgraded else 2)

    values = j_table(arguments[-1])
    factor = 1
    for a in (4, 2):
        if a <= cap and all(values[x] % (a * 2**p_prime) == 0 for x in arguments):
            factor = a
            break
    prediction = CongruencePrediction(
        r=r,
        s=s,
        p_prime=p_prime,
        c=c,
        upgraded=upgraded,
        factor=factor,
        modulus=factor * 2**p_prime,
        window=window,
    )
    logger.debug("congruence prediction for %dn+%d: %s", r, s, prediction)
    return prediction


def congruence_verify(r: int, s: int, modulus: int, upto: int, min_index: int = 0) -> CongruenceReport:
    """Check modulus | j(r n + s) for every n >= min_index with r n + s <= upto."""
    if r < 1 or s < 0 or modulus < 1:
        raise CountingError(f"need r >= 1, s >= 0 and modulus >= 1, got r={r}, s={s}, modulus={modulus}")
    claim = f"j({r}n+{s}) = 0 (mod {modulus}) for n >= {min_index}"
    first = r * min_index + s
    report_range = [first, upto]
    if upto < first:
        return CongruenceReport(claim=claim, range=report_range, status="pass")

    values = j_table(upto)
    n = min_index
    while r * n + s <= upto:
        argument = r * n + s
        if values[argument] % modulus:
            logger.info("%s fails at n=%d", claim, n)
            return CongruenceReport(
                claim=claim,
                range=report_range,
                status="fail",
                counterexample=Counterexample(n=n, argument=argument, value=values[argument]),
            )
        n += 1
    return CongruenceReport(claim=claim, range=report_range, status="pass")


def power_of_two_check(upto: int) -> CongruenceReport:
    """2^(min_squares(n)) divides j(n) for 1 <= n <= upto."""
    claim = "j(n) = 0 (mod 2**min_squares(n))"
    values = j_table(upto)
    squares = min_squares_table(upto)
    for n in range(1, upto + 1):
        if values[n] % 2 ** squares[n]:
            return CongruenceReport(
                claim=claim,
                range=[1, upto],
                status="fail",
                counterexample=Counterexample(n=n, argument=n, value=values[n]),
            )
    return CongruenceReport(claim=claim, range=[1, upto], status="pass")


def count_report(n: int) -> CountResponse:
    """j(n) by every method; small weights also get a brute-force count."""
    if n < 0:
        raise CountingError(f"n must be non-negative, got {n}")
    enumeration = None
    if n <= settings.enumeration_limit:
        enumeration = len(enumerate_partitions(F01, n))
    return CountResponse(
        n=n,
        recurrence=j_table(n)[n],
        convolution=j_by_convolution(n)[n],
        series=j_by_series(n)[n],
        enumeration=enumeration,
        squares=j_by_squares(n) if n >= 1 else None,
        estimate=ramanujan_estimate(n) if n >= 1 else None,
        min_squares=min_squares(n) if n >= 1 else None,
    )


def slice_report(r: int, s: int, order: int | None = None) -> SliceResponse:
    """j(r n + s) for n < order, read off the series expansion of J."""
    order = settings.default_order if order is None else order
    if r < 1 or not 0 <= s < r or order < 1:
        raise CountingError(f"slice needs r >= 1, 0 <= s < r and order >= 1, got r={r}, s={s}, order={order}")
    coefficients = series_slice(jagged_series(r * order + s + 1), r, s).coeffs[:order]
    return SliceResponse(r=r, s=s, order=len(coefficients), coefficients=list(coefficients))
