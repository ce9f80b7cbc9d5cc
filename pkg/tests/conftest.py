import itertools
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hesitant import HFE, HFS, Universe

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


# degree strategies on the 0.01 grid (exact Fractions)
grid_degrees = st.integers(min_value=0, max_value=100).map(lambda k: Fraction(k, 100))


@st.composite
def hfes(draw, max_size=6, degrees=grid_degrees):
    values = draw(st.lists(degrees, min_size=1, max_size=max_size))
    return HFE(values)


@st.composite
def hfs_pairs(draw, universe_sizes=(1, 3), max_card=5):
    size = draw(st.integers(*universe_sizes))
    uni = Universe([f"x{i}" for i in range(1, size + 1)])
    make = lambda: {e: draw(hfes(max_size=max_card)) for e in uni}  # noqa: E731
    return HFS(uni, make()), HFS(uni, make())


def all_small_hfes(denominator=2, max_card=3):
    """Every canonical HFE with degrees on {0, 1/d, ..., 1} and cardinality
    <= max_card. For d=2, card<=3 this is 19 elements."""
    values = [Fraction(k, denominator) for k in range(denominator + 1)]
    out = []
    for k in range(1, max_card + 1):
        for combo in itertools.combinations_with_replacement(values, k):
            out.append(HFE(combo))
    return out


@pytest.fixture(scope="session")
def small_hfes():
    return all_small_hfes()
