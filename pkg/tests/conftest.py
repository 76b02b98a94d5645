import numpy as np
import pytest

from homproj import extreme_points


@pytest.fixture
def square():
    return extreme_points([[0, 0], [1, 0], [0, 1], [1, 1]])


@pytest.fixture
def triangle():
    return extreme_points([[0, 0], [1, 0], [0, 1]])


@pytest.fixture
def cube():
    return extreme_points([[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)])


@pytest.fixture
def octahedron():
    return extreme_points(np.vstack([np.eye(3), -np.eye(3)]))
