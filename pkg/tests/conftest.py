import pytest

from app.services.counting_service import j_table


@pytest.fixture(scope="session")
def j_values():
    """Exact j(0..600) from the recurrence."""
    return j_table(600)


@pytest.fixture(scope="session")
def length_five_partitions():
    """01-partitions of weight <= 7 and length 5."""
    return {
        tuple(int(c) for c in word)
        for word in (
            "10101 20101 11101 30101 21101 11111 12101 40101 31101 22101 21111 12111 "
            "21201 50101 41101 32101 31111 22111 23101 21211 12121 31201 22201"
        ).split()
    }


@pytest.fixture(scope="session")
def weight_three_partitions():
    """All 01-partitions of weight 3."""
    return [(3,), (2, 1), (1, 2), (2, 0, 1), (1, 1, 1), (1, 1, 0, 1), (1, 0, 1, 0, 1), (0, 1, 0, 1, 0, 1)]


@pytest.fixture(scope="session")
def weight_nine_02_partitions():
    """02-partitions of weight 9 and length 5."""
    return {(5, 0, 2, 0, 2), (4, 1, 2, 0, 2), (3, 2, 2, 0, 2), (3, 1, 2, 1, 2), (3, 1, 3, 0, 2), (2, 3, 2, 0, 2), (2, 2, 2, 1, 2)}
