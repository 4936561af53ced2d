import numpy as np
import pytest

from prism_silt.verify import algebra


@pytest.fixture(scope="session")
def pi():
    return lambda n: algebra("Pi", n)


@pytest.fixture(scope="session")
def pibar():
    return lambda n: algebra("Pibar", n)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
