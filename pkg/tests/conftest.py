"""Shared fixtures: canonical parameter set and cached ladders.

The canonical set m=1, gamma=1, k=1.25 gives omega=1 and lambda=1/2 exactly,
so frozen eigenvalue targets stay integer-and-half valued.
"""

import pytest

from bateman.fock import build_ladder
from bateman.params import derive_params


@pytest.fixture(scope="session")
def params():
    return derive_params(m=1.0, gamma=1.0, k=1.25)


@pytest.fixture(scope="session")
def ladder8():
    return build_ladder(8)


@pytest.fixture(scope="session")
def ladder12():
    return build_ladder(12)
