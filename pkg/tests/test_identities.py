import pytest

from app.core.errors import SeriesError, UnknownIdentityError
from app.services.counting_service import p_table, two_square_count
from app.services.identities_service import (
    GROUPS,
    REGISTRY,
    IdentityCase,
    list_identities,
    top_level_names,
    verify,
    verify_all,
    verify_case,
)
from app.services.qseries_service import IntSeries, jagged_series, theta_sum


class TestRegistry:
    def test_listing_covers_cases_and_groups(self):
        names = {info.name for info in list_identities()}
        assert set(REGISTRY) <= names
        assert set(GROUPS) <= names

    def test_groups(self):
        assert len(GROUPS["eq18"]) == 9
        assert GROUPS["eq28"] == tuple(f"eq28_{c}" for c in range(1, 9))
        assert all(member in REGISTRY for members in GROUPS.values() for member in members)

    def test_top_level_names_fold_groups(self):
        names = top_level_names()
        assert "eq18" in names
        assert "eq18_20" not in names
        assert "eq28_1" not in names


class TestVerify:
    """Exact comparison of both sides at a moderate order."""

    @pytest.mark.parametrize("name", sorted(REGISTRY))
    def test_registered_identity_holds(self, name):
        report = verify(name, 48)
        assert report.status == "pass", report.mismatch

    @pytest.mark.parametrize("name", sorted(GROUPS))
    def test_group_holds(self, name):
        report = verify(name, 40)
        assert report.status == "pass"
        assert [m.name for m in report.members] == list(GROUPS[name])

    def test_corrupted_identity_reports_first_mismatch(self):
        case = IdentityCase(
            "broken",
            "J(q) theta4(q) = 1 + q",
            lambda n: jagged_series(n) * theta_sum(1, 0, True, n),
            lambda n: IntSeries.constant(1, n) + IntSeries.monomial(1, n),
        )
        report = verify_case(case, 30)
        assert report.status == "fail"
        assert (report.mismatch.exponent, report.mismatch.lhs, report.mismatch.rhs) == (1, 0, 1)

    def test_unknown_name(self):
        with pytest.raises(UnknownIdentityError):
            verify("eq999")

    def test_order_must_be_positive(self):
        with pytest.raises(SeriesError):
            verify("eq6", 0)

    def test_report_serializes_mismatch_values_as_strings(self):
        case = IdentityCase("off", "1 = 2", lambda n: IntSeries.constant(1, n), lambda n: IntSeries.constant(2, n))
        payload = verify_case(case, 5).model_dump(mode="json")
        assert payload["mismatch"] == {"exponent": 0, "lhs": "1", "rhs": "2"}

    def test_report_keys(self):
        payload = verify("eq6", 20).model_dump(mode="json")
        assert set(payload) == {"name", "reference", "order", "substitution", "status", "mismatch", "members"}
        assert payload["reference"] == REGISTRY["eq6"].reference


class TestConsequences:
    """Combinatorial readings of registered identities."""

    def test_two_squares_reading(self):
        lhs = REGISTRY["eq97"].lhs(41)
        assert all(lhs[p] == two_square_count(p) for p in range(41))
        assert all(lhs[p] == two_square_count(p // 2) for p in range(0, 41, 2))

    def test_partitions_five_n_plus_four(self):
        p = p_table(100)
        assert all(p[5 * n + 4] % 5 == 0 for n in range(20))
        rhs = REGISTRY["eq17"].rhs(20)
        assert all(c % 5 == 0 for c in rhs.coeffs)
        assert [p[5 * n + 4] for n in range(20)] == list(rhs.coeffs)


@pytest.mark.slow
class TestVerifyAll:
    def test_every_entry_passes_at_default_order(self):
        reports = verify_all()
        assert [r.name for r in reports] == top_level_names()
        assert all(r.status == "pass" for r in reports), [r.name for r in reports if r.status == "fail"]
