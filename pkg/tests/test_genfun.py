import pytest

from app.core.errors import FamilyError, IllPosedSystemError, SeriesError
from app.services.counting_service import p_mn
from app.services.families_service import F001, F01, F012, F02
from app.services.genfun_service import (
    BiSeries,
    QDiffSystem,
    Term,
    bi_monomial,
    bi_truncate,
    bi_scale,
    closed_form,
    dilate,
    family_series,
    family_transform,
    multisum,
    qdiff_solve,
    restricted_series,
    series_report,
    solve_family,
    staircase_transform,
)


class TestBiSeries:
    """Truncated arithmetic in two variables."""

    def test_rows_keep_their_own_order(self):
        a = BiSeries.from_lists([[1, 0], [0, 1, 0]])
        assert [row.order for row in a.rows] == [2, 3]
        assert a.q_order == 2
        assert a.coefficient(1, 2) == 0

    def test_needs_a_row(self):
        with pytest.raises(SeriesError):
            BiSeries.from_lists([])

    def test_truncate(self):
        a = bi_truncate(closed_form("01", 3, 10), 4)
        assert a.q_order == 4
        assert a == closed_form("01", 3, 4)
        with pytest.raises(SeriesError):
            bi_truncate(a, 5)

    def test_monomial_product(self):
        a = bi_monomial(2, 1, 1, 3, 5)
        b = bi_monomial(3, 1, 2, 3, 5)
        assert (a * b).to_lists()[2] == [0, 0, 0, 6, 0]

    def test_one_is_neutral(self):
        a = closed_form("01", 4, 8)
        assert a * BiSeries.one(4, 8) == a
        assert (a - a) == BiSeries.zero(4, 8)

    def test_scale_and_dilate(self):
        a = BiSeries.from_lists([[1, 1, 0, 0], [1, 1, 0, 0]])
        assert bi_scale(a, -1, 1, 1).to_lists() == [[0, 0, 0, 0], [0, -1, -1, 0]]
        assert dilate(a, 2).to_lists() == [[1, 1, 0, 0], [0, 0, 1, 1]]
        with pytest.raises(SeriesError):
            bi_scale(a, 1, -1, 0)
        with pytest.raises(SeriesError):
            dilate(a, -1)


class TestClosedForms:
    def test_single_part_row(self):
        assert closed_form("01", 3, 5).to_lists()[1] == [0, 1, 1, 1, 1]

    @pytest.mark.parametrize("spec", [F01, F02, F012, F001], ids=lambda spec: spec.name)
    def test_matches_enumeration(self, spec):
        weight = 11
        z_max = spec.zero_slack_distance * weight
        assert closed_form(spec.name, z_max, weight + 1) == family_series(spec, z_max, weight + 1)

    def test_weight_three_polynomial(self):
        assert [closed_form("01", 8, 4).coefficient(m, 3) for m in range(9)] == [0, 1, 2, 2, 1, 1, 1, 0, 0]

    def test_02_coefficient(self):
        assert closed_form("02", 6, 10).coefficient(5, 9) == 7

    def test_no_zero_part_variant(self):
        with_zero = closed_form("01", 6, 10)
        without_zero = closed_form("01K", 6, 10)
        assert all(
            without_zero.coefficient(m, n) <= with_zero.coefficient(m, n) for m in range(7) for n in range(10)
        )
        assert without_zero.coefficient(3, 1) == 0

    def test_unknown_family(self):
        with pytest.raises(FamilyError):
            closed_form("03")


class TestStaircase:
    def test_two_part_row_counts_partitions_into_two_parts(self):
        row = family_transform(closed_form("01", 2, 13), F01).rows[2]
        assert [row[n] for n in range(13)] == [p_mn(2, n) for n in range(13)]

    def test_02_shift_lands_on_weight_24(self):
        assert family_transform(closed_form("02", 5, 25), F02).coefficient(5, 24) == 7

    def test_01_transform_is_restricted_partitions(self):
        a = family_transform(closed_form("01", 5, 14), F01)
        assert a == restricted_series(F01.restricted_conditions(), 5, 14)

    def test_negative_shift_shortens_only_its_row(self):
        a = family_transform(closed_form("012", 4, 12), F012)
        assert [row.order for row in a.rows] == [12, 11, 11, 12, 12]
        assert a.q_order == 11
        assert a == restricted_series(F012.restricted_conditions(), 4, 11)

    def test_negative_shift_needs_vanishing_coefficients(self):
        a = BiSeries.from_lists([[1, 0, 0], [1, 1, 0]])
        with pytest.raises(SeriesError):
            staircase_transform(a, lambda m: -m)


class TestQDifference:
    @pytest.mark.parametrize("name", ["01", "02", "012", "001"])
    def test_systems_reproduce_closed_forms(self, name):
        assert solve_family(name, 7, 12) == closed_form(name, 7, 12)

    def test_restricted_systems(self):
        expected = family_transform(closed_form("01", 6, 16), F01)
        assert solve_family("01-restricted", 6, 16) == expected
        assert solve_family("01-restricted-single", 6, 16) == expected

    def test_unknown_system(self):
        with pytest.raises(FamilyError):
            solve_family("07")

    def test_weightless_cycle_is_rejected(self):
        system = QDiffSystem("loop", "A", {"A": (Term(1, 0, 0, "B"),), "B": (Term(1, 0, 0, "A"),)})
        with pytest.raises(IllPosedSystemError):
            qdiff_solve(system, 2, 4)

    def test_undefined_unknown_is_rejected(self):
        system = QDiffSystem("dangling", "A", {"A": (Term(1, 1, 1, "Z"),)})
        with pytest.raises(IllPosedSystemError):
            qdiff_solve(system, 2, 4)

    def test_missing_ground_is_rejected(self):
        system = QDiffSystem("groundless", "X", {"A": (Term(1, 1, 1, "A"),)})
        with pytest.raises(IllPosedSystemError):
            qdiff_solve(system, 2, 4)


class TestMultiSums:
    def test_unrestricted_sums(self):
        assert multisum("sum-02", 6, 14) == closed_form("02", 6, 14)
        assert multisum("sum-012", 6, 14) == closed_form("012", 6, 14)

    @pytest.mark.parametrize(
        "name, spec",
        [
            ("sum-01-restricted", F01),
            ("sum-02-restricted", F02),
            ("sum-012-restricted", F012),
            ("sum-001-restricted", F001),
        ],
        ids=["01", "02", "012", "001"],
    )
    def test_restricted_sums(self, name, spec):
        expected = family_transform(closed_form(spec.name, 6, 16), spec)
        assert multisum(name, 6, 16) == expected

    def test_unknown_sum(self):
        with pytest.raises(SeriesError):
            multisum("eq1")


class TestReport:
    def test_closed_form_report(self):
        report = series_report("01", z_max=3, q_order=5)
        assert report.rows[1] == [0, 1, 1, 1, 1]
        assert report.model_dump(mode="json")["rows"][1][1] == "1"

    def test_staircase_report(self):
        report = series_report("012", "enumeration", 4, 12, staircase=True)
        assert report.q_order == 12
        assert all(len(row) == 12 for row in report.rows)
        assert report.rows == restricted_series(F012.restricted_conditions(), 4, 12).to_lists()

    def test_staircase_report_keeps_requested_order(self):
        report = series_report("02", "closed_form", 5, 25, staircase=True)
        assert report.q_order == 25
        assert report.rows[5][24] == 7
        assert report.rows[1][0] == 0

    def test_staircase_not_available_for_systems(self):
        with pytest.raises(SeriesError):
            series_report("01", "qdiff", 3, 6, staircase=True)

    def test_unknown_source(self):
        with pytest.raises(SeriesError):
            series_report("01", "guess")
