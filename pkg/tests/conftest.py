from fractions import Fraction

import pytest

from opcert.overpartitions import build_table


@pytest.fixture(scope="session")
def table():
    """Exact value table shared by all tests; covers every scanned range."""
    return build_table(6103)


@pytest.fixture(scope="session")
def alpha0():
    return Fraction(0)
