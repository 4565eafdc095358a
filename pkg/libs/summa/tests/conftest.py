import numpy as np
import pytest

from summa.forms import hadamard_form
from summa.norms import NormEstimator


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def hadamard():
    return hadamard_form()


@pytest.fixture
def serial_estimator():
    return NormEstimator(restarts=8, max_iters=100, seed=0, concurrent=False)
