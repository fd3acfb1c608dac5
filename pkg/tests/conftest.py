import pytest

from gmaj import all_bipartitions


@pytest.fixture(scope="session")
def bipartitions_by_r():
    """Every ordered bipartition for r = 1, 2, 3 (86 in total)."""
    return {r: list(all_bipartitions(r)) for r in (1, 2, 3)}


@pytest.fixture(scope="session")
def compatible_by_r():
    return {r: list(all_bipartitions(r, compatible_only=True)) for r in (1, 2, 3)}
