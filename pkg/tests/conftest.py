import numpy as np
import pytest

from hardydual import CircleGrid, MassSet, SpaceData, symbol_from_expression, zero_symbol


@pytest.fixture(scope="session")
def grid512():
    return CircleGrid(512)


@pytest.fixture(scope="session")
def grid4096():
    return CircleGrid(4096)


@pytest.fixture(scope="session")
def mass_space(grid4096):
    """The closed-form case: zero symbol, single mass 3 at 1/2."""
    masses = MassSet(np.array([0.5]), np.array([3.0]))
    return SpaceData(zero_symbol(grid4096), masses)


@pytest.fixture(scope="session")
def hankel_space(grid4096):
    """The closed-form case: R(t) = 0.6 conj(t), no masses."""
    return SpaceData(symbol_from_expression(grid4096, "0.6*conj(t)"), MassSet.empty())
