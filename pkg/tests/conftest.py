import pytest
from hypothesis import strategies as st

from zvkpair.monodromy import load_fixture
from zvkpair.pipeline import curve_group


def words(rank=4, max_size=12):
    return st.lists(st.integers(-rank, rank).filter(bool), max_size=max_size)


def braid_letters(strands=4, max_size=10):
    return st.lists(st.integers(-(strands - 1), strands - 1).filter(bool), max_size=max_size)


@pytest.fixture(scope="session")
def curve_groups():
    """{name: (full projective presentation, simplified)} for both sextics."""
    return {name: curve_group(load_fixture(name)) for name in ("c1_special", "c2_special")}
