from fractions import Fraction

import pytest

from ringfill import Params, build_filling


@pytest.fixture(scope="session")
def small_build():
    """Smallest accepted filling at the canonical parameters, cheap enough
    for exhaustive cross-checks (Floyd-Warshall, all-pairs bounds)."""
    return build_filling(Params(25, Fraction(1, 10), Fraction(1, 4)))


@pytest.fixture(scope="session")
def medium_build():
    return build_filling(Params(64, Fraction(1, 10), Fraction(1, 4)))
