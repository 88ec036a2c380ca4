import os

import numpy as np
import pytest

from twclust import build_graph


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: full-size acceptance criteria")


@pytest.fixture(scope="session")
def jobs():
    return int(os.environ.get("TWCLUST_TEST_JOBS", os.cpu_count() or 1))


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def cycle5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, k=1)
    mask = rng.random(iu[0].size) < p
    return build_graph(n, np.column_stack([iu[0][mask], iu[1][mask]]))
