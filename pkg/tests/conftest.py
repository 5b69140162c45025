import numpy as np
import pytest

from jordanmm.sampling import Sampler


@pytest.fixture
def sampler():
    return Sampler(20240517)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)
