import pytest

from app.services import suite_service
from app.services.suite_service import LENGTH_FIVE_PARTITIONS, WEIGHT_THREE_LENGTHS, run_suite


class TestGoldenData:
    def test_partition_list_is_consistent(self):
        assert len(LENGTH_FIVE_PARTITIONS) == len(set(LENGTH_FIVE_PARTITIONS)) == 23
        assert all(len(p) == 5 and sum(p) <= 7 for p in LENGTH_FIVE_PARTITIONS)

    def test_polynomial_sums_to_j3(self):
        assert sum(WEIGHT_THREE_LENGTHS) == 8


class TestChecks:
    """Each acceptance check passes on its own."""

    @pytest.mark.parametrize(
        "check",
        [
            suite_service.check_length_five_list,
            suite_service.check_weight_three_polynomial,
            suite_service.check_j_agreement,
            suite_service.check_congruences,
            suite_service.check_slices,
            suite_service.check_closed_forms,
            suite_service.check_multisums,
            suite_service.check_qdiff,
            suite_service.check_at_most,
            suite_service.check_estimate,
        ],
        ids=lambda check: check.__name__,
    )
    def test_check_passes(self, check):
        entry = check()
        assert entry.status == "pass", entry.detail

    def test_entry_records_failure(self):
        entry = suite_service._entry("always false", False, "detail")
        assert (entry.status, entry.detail) == ("fail", "detail")


@pytest.mark.slow
class TestRunSuite:
    def test_full_suite(self):
        report = run_suite()
        assert report.status == "pass", [e.claim for e in report.entries if e.status == "fail"]
        assert report.passed == len(report.entries) == 11
        assert report.failed == 0
