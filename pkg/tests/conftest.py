"""
Shared fixtures: seeded generators and trained fixture networks.
"""
import numpy as np
import pytest

from application import neural_network
from domain.value_objects.train_config import TrainConfig

from tests.synthetic import MEMORIZED_ROW


@pytest.fixture
def rng():
    """Seeded generator for test data."""
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def line_points():
    """200 points on the line x2 = x1 inside [0, 1]."""
    x = np.random.default_rng(7).uniform(0.05, 0.95, 200)
    return np.column_stack([x, x])


@pytest.fixture(scope="session")
def line_net(line_points):
    """Autoassociative 2-1-2 net trained on the x2 = x1 line."""
    config = TrainConfig(learning_rate=1.0, epochs=3000, batch_size=16, seed=3)
    net, _ = neural_network.train_autoassociative(line_points, config, hidden_size=1)
    return net


@pytest.fixture(scope="session")
def memorized_net():
    """Autoassociative net trained on one row repeated ten times."""
    data = np.tile(MEMORIZED_ROW, (10, 1))
    net, _ = neural_network.train_autoassociative(data, TrainConfig(seed=11))
    return net
