from fractions import Fraction as Fr

import pytest

from indexed_identity import FiniteIndexedSystem, IFuzzySet, PredicateTable


@pytest.fixture
def numbers_table():
    # even, odd, prime over {2, 3, 8}
    return PredicateTable(
        ["2", "3", "8"],
        ["even", "odd", "prime"],
        [[True, False, True], [False, True, True], [True, False, False]],
    )


@pytest.fixture
def numbers_system():
    return FiniteIndexedSystem.from_pairs(
        ["2", "3", "8"], {("2", "3"): Fr(1, 3), ("3", "8"): 0, ("2", "8"): Fr(2, 3)})


@pytest.fixture
def fgh(numbers_system):
    s = numbers_system
    F = IFuzzySet(s, {"8": 1, "2": Fr(2, 3), "3": 0})
    G = IFuzzySet(s, {"3": 1, "2": Fr(1, 3), "8": 0})
    H = IFuzzySet(s, {"2": 1, "8": Fr(2, 3), "3": Fr(1, 3)})
    return F, G, H


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, title = RESULTS[number]
        terminalreporter.write_line(f"[{status}] AC{number}: {title}")
