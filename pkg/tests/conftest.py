import os

import numpy as np
import pytest

import sysgeom


@pytest.fixture(scope="module")
def rgen():
    return np.random.RandomState(seed=3476583865)


@pytest.fixture(scope="session")
def datadir():
    return os.path.join(os.path.dirname(sysgeom.__file__), 'data')
