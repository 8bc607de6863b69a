import pytest

from app.core.errors import FamilyError
from app.services.families_service import (
    F001,
    F01,
    F012,
    F02,
    count_partitions,
    enumerate_partitions,
    enumerate_restricted,
    f0p1,
    is_valid,
    length_profile,
    make_family,
    max_length,
    max_length_report,
    min_weight,
    parse_family,
    partitions_report,
    staircase_map,
)


class TestFamilySpec:
    """Validation and derived quantities of family definitions."""

    def test_builtin_constraints(self):
        assert F01.constraints == ((1, 1), (2, 0))
        assert F02.tail_min == 2
        assert F012.zero_slack_distance == 3
        assert F001.constraints == ((1, 1), (2, 1), (3, 0))

    def test_default_staircases(self):
        assert (F01.stair_slope, F01.stair_offset) == (1, 0)
        assert (F02.stair_slope, F02.stair_offset) == (2, -1)
        assert (F012.stair_slope, F012.stair_offset) == (1, -1)
        assert F01.sigma(3) == 3

    def test_restricted_conditions(self):
        assert F01.restricted_conditions() == ((1, 0), (2, 2))

    def test_general_0p1(self):
        assert f0p1(3).constraints == ((1, 1), (2, 1), (3, 1), (4, 0))
        with pytest.raises(FamilyError):
            f0p1(0)

    @pytest.mark.parametrize(
        "constraints, tail_min",
        [
            ([(1, 1)], 1),
            ([(1, 0), (1, 1)], 1),
            ([(0, 0)], 1),
            ([(1, -1), (2, 0)], 1),
            ([(1, 1), (2, 0)], 0),
        ],
    )
    def test_invalid_families(self, constraints, tail_min):
        with pytest.raises(FamilyError):
            make_family("bad", constraints, tail_min)


class TestParseFamily:
    def test_builtin_names(self):
        assert parse_family("02") is F02
        assert parse_family("0p1:4").constraints[-1] == (5, 0)

    def test_compact_spec(self):
        spec = parse_family("d2:0,d1:1;tail=1")
        assert spec.constraints == F01.constraints
        assert spec.describe() == "d1:1,d2:0;tail=1;stair=1:0"

    def test_explicit_staircase(self):
        spec = parse_family("d1:2,d2:0;tail=2;stair=3:0")
        assert (spec.stair_slope, spec.stair_offset) == (3, 0)

    @pytest.mark.parametrize("text", ["", "d1:x", "d1:1,d2:0;colour=red", "d1:1;tail=1", "0p1:two", "d1:1,d2:0;tail=z"])
    def test_rejects_malformed(self, text):
        with pytest.raises(FamilyError):
            parse_family(text)


class TestEnumeration:
    def test_length_five_list(self, length_five_partitions):
        found = {p for n in range(8) for p in enumerate_partitions(F01, n, 5)}
        assert found == length_five_partitions

    def test_weight_three_all_lengths(self, weight_three_partitions):
        assert enumerate_partitions(F01, 3) == sorted(weight_three_partitions)
        assert length_profile(F01, 3) == {1: 1, 2: 2, 3: 2, 4: 1, 5: 1, 6: 1}

    def test_02_weight_nine_length_five(self, weight_nine_02_partitions):
        assert set(enumerate_partitions(F02, 9, 5)) == weight_nine_02_partitions
        assert count_partitions(F02, 9, 5) == 7

    def test_results_are_valid_and_sorted(self):
        for spec in (F01, F02, F012, F001):
            parts = enumerate_partitions(spec, 9)
            assert parts == sorted(parts)
            assert len(set(parts)) == len(parts)
            assert all(is_valid(spec, p) and sum(p) == 9 for p in parts)

    def test_counts_match_jagged_numbers(self, j_values):
        assert [len(enumerate_partitions(F01, n)) for n in range(12)] == list(j_values[:12])

    def test_one_slack_family_is_01(self):
        same = f0p1(1)
        for n in range(16):
            assert enumerate_partitions(same, n) == enumerate_partitions(F01, n)

    def test_empty_partition(self):
        assert enumerate_partitions(F01, 0) == [()]
        assert enumerate_partitions(F01, 0, 0) == [()]
        assert enumerate_partitions(F01, 3, 0) == []

    def test_negative_arguments(self):
        with pytest.raises(FamilyError):
            enumerate_partitions(F01, -1)
        with pytest.raises(FamilyError):
            enumerate_partitions(F01, 3, -2)

    def test_min_weight_and_max_length(self):
        assert min_weight(F01, 5) == 3
        assert min_weight(F02, 5) == 6
        assert max_length(F01, 3) == 6
        assert max_length(F02, 1) == 0
        assert count_partitions(F01, 7, 5) == 10


class TestIsValid:
    @pytest.mark.parametrize("parts", [(1, 2), (0, 1, 0, 1, 0, 1), (2, 1, 2, 0, 1)])
    def test_members(self, parts):
        assert is_valid(F01, parts)

    @pytest.mark.parametrize("parts", [(), (1, 0), (0, 2), (1, 0, 2), (-1, 1, 1)])
    def test_non_members(self, parts):
        assert not is_valid(F01, parts)


class TestStaircase:
    def test_01_image(self):
        assert staircase_map(F01, (1, 0, 1)) == (3, 1, 1)

    def test_02_image(self):
        assert staircase_map(F02, (5, 0, 2, 0, 2)) == (12, 5, 5, 1, 1)

    def test_images_are_partitions_with_the_right_weight(self):
        for spec in (F01, F02, F012, F001):
            for parts in enumerate_partitions(spec, 8):
                image = staircase_map(spec, parts)
                assert list(image) == sorted(image, reverse=True)
                assert image[-1] >= 1
                assert sum(image) == 8 + spec.sigma(len(parts))

    def test_rejects_non_member(self):
        with pytest.raises(FamilyError):
            staircase_map(F01, (0, 2))


class TestRestricted:
    def test_second_neighbour_gap(self):
        assert enumerate_restricted([(2, 2)], 6, 2) == [(3, 3), (4, 2), (5, 1)]
        assert enumerate_restricted([(2, 2)], 6, 3) == [(3, 2, 1), (4, 1, 1)]

    def test_images_land_in_restricted_set(self):
        conditions = F01.restricted_conditions()
        for parts in enumerate_partitions(F01, 6, 4):
            image = staircase_map(F01, parts)
            assert image in enumerate_restricted(conditions, sum(image), 4)

    def test_bad_distance(self):
        with pytest.raises(FamilyError):
            enumerate_restricted([(0, 1)], 4, 2)

    @pytest.mark.parametrize("spec", [F01, F02, F012, F001], ids=lambda spec: spec.name)
    def test_staircase_is_a_bijection(self, spec):
        conditions = spec.restricted_conditions()
        for n in range(1, 13):
            for m in range(1, max_length(spec, n) + 1):
                if min_weight(spec, m) > n:
                    continue
                images = [staircase_map(spec, p) for p in enumerate_partitions(spec, n, m)]
                assert len(set(images)) == len(images)
                assert sorted(images) == sorted(enumerate_restricted(conditions, n + spec.sigma(m), m))


class TestReports:
    def test_partitions_report(self):
        report = partitions_report(F01, 3, with_staircase=True)
        assert report.count == 8
        assert report.by_length == {1: 1, 2: 2, 3: 2, 4: 1, 5: 1, 6: 1}
        assert report.family.name == "01"
        assert len(report.staircase) == 8

    def test_weight_zero_staircase_stays_aligned(self):
        report = partitions_report(F01, 0, with_staircase=True)
        assert report.partitions == [[]]
        assert report.staircase == [[]]

    def test_max_length_report(self):
        assert max_length_report(F01, 3).max_length == 6
