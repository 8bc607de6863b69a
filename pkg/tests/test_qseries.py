import random

import pytest

from app.core.errors import SeriesError
from app.services.qseries_service import (
    EtaQuotient,
    IntSeries,
    euler_product,
    eval_eta,
    first_mismatch,
    jagged_series,
    partition_series,
    pochhammer_fin,
    pochhammer_inf,
    series_invert,
    series_pow,
    series_slice,
    shift,
    substitute_power,
    theta_sum,
    truncate,
)


class TestArithmetic:
    """Truncated ring operations."""

    def test_binary_operations_truncate_to_smaller_order(self):
        a = IntSeries.from_coeffs([1, 1, 1, 1, 1])
        b = IntSeries.from_coeffs([1, -1, 0])
        assert (a + b).coeffs == (2, 0, 1)
        assert (a * b).coeffs == (1, 0, 0)

    def test_int_coercion(self):
        a = IntSeries.from_coeffs([1, 2, 3])
        assert (1 - a).coeffs == (0, -2, -3)
        assert (3 * a).coeffs == (3, 6, 9)

    def test_equality_up_to_common_order(self):
        assert IntSeries.from_coeffs([1, 2]) == IntSeries.from_coeffs([1, 2, 99])
        assert IntSeries.from_coeffs([1, 2]) != IntSeries.from_coeffs([1, 3, 0])

    def test_empty_series_rejected(self):
        with pytest.raises(SeriesError):
            IntSeries(())

    def test_shift_and_truncate(self):
        a = IntSeries.from_coeffs([1, 2, 3, 4])
        assert shift(a, 2).coeffs == (0, 0, 1, 2)
        assert truncate(a, 2).coeffs == (1, 2)
        with pytest.raises(SeriesError):
            truncate(a, 5)

    def test_first_mismatch(self):
        a = IntSeries.from_coeffs([1, 2, 3])
        assert first_mismatch(a, IntSeries.from_coeffs([1, 2, 4])) == 2
        assert first_mismatch(a, a) is None


class TestInversionAndPowers:
    def test_inverse_of_one_minus_q_is_geometric(self):
        inv = series_invert(IntSeries.from_coeffs([1, -1], order=6))
        assert inv.coeffs == (1, 1, 1, 1, 1, 1)

    def test_non_unit_constant_rejected(self):
        with pytest.raises(SeriesError):
            series_invert(IntSeries.from_coeffs([2, 1]))

    def test_negative_constant_term(self):
        a = IntSeries.from_coeffs([-1, 1], order=5)
        assert series_invert(a) * a == IntSeries.constant(1, 5)

    def test_power_matches_repeated_product(self):
        a = IntSeries.from_coeffs([1, 3, -2, 5], order=12)
        assert series_pow(a, 3) == a * a * a
        assert series_pow(a, -2) * a * a == IntSeries.constant(1, 12)

    def test_power_of_non_unit_series(self):
        a = IntSeries.from_coeffs([0, 1], order=6)
        assert series_pow(a, 3).coeffs == (0, 0, 0, 1, 0, 0)
        with pytest.raises(SeriesError):
            series_pow(a, -1)


class TestProducts:
    def test_pentagonal_expansion(self):
        assert euler_product(1, 16).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1)

    def test_pentagonal_matches_finite_product(self):
        assert euler_product(2, 60) == pochhammer_fin(2, 30, 60)
        assert euler_product(1, 40) == pochhammer_inf(1, "-", 1, 40)

    def test_partition_numbers(self):
        assert partition_series(11).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)

    def test_distinct_parts_power(self):
        distinct = pochhammer_inf(1, "+", 1, 10)
        assert distinct.coeffs == (1, 1, 1, 2, 2, 3, 4, 5, 6, 8)
        assert pochhammer_inf(1, "+", -1, 10) * distinct == IntSeries.constant(1, 10)

    def test_eta_quotient_with_constant_and_shift(self):
        value = eval_eta(EtaQuotient(constant=2, q_shift=1, factors=((1, 1),)), 5)
        assert value.coeffs == (0, 2, -2, -2, 0)

    def test_eta_quotient_rejects_bad_step(self):
        with pytest.raises(SeriesError):
            EtaQuotient(factors=((0, 1),))


class TestThetaAndSlices:
    def test_theta4(self):
        assert theta_sum(1, 0, True, 10).coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)

    def test_theta_with_linear_term(self):
        # sum over all n of q^(2n^2 + 2n): each exponent appears twice
        assert theta_sum(2, 2, False, 13).coeffs == (2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2)

    def test_theta_rejects_large_linear_term(self):
        with pytest.raises(SeriesError):
            theta_sum(1, 2, False, 10)

    def test_jagged_series_start(self):
        assert jagged_series(11).coeffs == (1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232)

    def test_slice_and_substitution(self):
        j = jagged_series(30)
        assert series_slice(j, 8, 7).coeffs[:2] == (64, j[15])
        assert series_slice(j, 3, 0).order == 10
        assert substitute_power(IntSeries.from_coeffs([1, 2]), 3).coeffs == (1, 0, 0, 2, 0, 0)

    def test_slice_validation(self):
        with pytest.raises(SeriesError):
            series_slice(jagged_series(10), 3, 3)
        with pytest.raises(SeriesError):
            series_slice(jagged_series(2), 5, 4)

    @pytest.mark.parametrize("r", [2, 3, 4, 8])
    def test_slices_reassemble_the_series(self, r):
        j = jagged_series(80)
        total = IntSeries.constant(0, 80)
        for s in range(r):
            part = shift(substitute_power(series_slice(j, r, s), r), s)
            total = total + IntSeries.from_coeffs(part.coeffs, order=80)
        assert total.coeffs == j.coeffs


def _random_series(rng: random.Random, order: int = 20, unit: bool = False) -> IntSeries:
    coeffs = [rng.randint(-5, 5) for _ in range(order)]
    if unit:
        coeffs[0] = rng.choice((1, -1))
    return IntSeries.from_coeffs(coeffs)


class TestRingLaws:
    """Truncated arithmetic on random integer series."""

    @pytest.mark.parametrize("seed", range(5))
    def test_commutative_ring(self, seed):
        rng = random.Random(seed)
        a, b, c = (_random_series(rng) for _ in range(3))
        zero = IntSeries.constant(0, 20)
        one = IntSeries.constant(1, 20)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a - a == zero

    @pytest.mark.parametrize("seed", range(5))
    def test_inverse_and_powers_round_trip(self, seed):
        rng = random.Random(100 + seed)
        a = _random_series(rng, unit=True)
        one = IntSeries.constant(1, 20)
        assert series_invert(a) * a == one
        assert series_invert(series_invert(a)) == a
        assert series_pow(a, -1) == series_invert(a)
        assert series_pow(a, 3) * series_pow(a, -3) == one
        assert series_pow(a, 2) == a * a
