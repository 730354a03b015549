"""Test fixtures for core package tests."""

import math

import numpy as np
import pytest
from core.domain.entities.point_pattern import PointPattern
from core.domain.services.point_processes import sample_poisson
from core.domain.value_objects.model_spec import ModelSpec
from core.domain.value_objects.seed_spec import SeedSpec
from core.domain.value_objects.window import Window
from core.services.replication_runner import ReplicationRunner

SQRT3 = math.sqrt(3)


@pytest.fixture
def unit_window():
    return Window(x0=-1, y0=-1, x1=2, y1=2)


@pytest.fixture
def two_points(unit_window):
    return PointPattern(points=((0.0, 0.0), (1.0, 0.0)), window=unit_window)


@pytest.fixture
def three_points(unit_window):
    """Right-angled at the origin; merges at 0.45 then 0.5."""
    return PointPattern(
        points=((0.0, 0.0), (1.0, 0.0), (0.0, 0.9)), window=unit_window
    )


@pytest.fixture
def equilateral(unit_window):
    return PointPattern(
        points=((0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2)), window=unit_window
    )


@pytest.fixture
def unit_square(unit_window):
    return PointPattern(
        points=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)), window=unit_window
    )


@pytest.fixture
def poisson_window():
    return Window(x0=0, y0=0, x1=5, y1=5)


@pytest.fixture
def poisson_pattern(poisson_window):
    """A Poisson(2) sample on the 5x5 window, about 50 points."""
    return sample_poisson(poisson_window, 2.0, SeedSpec(master=2024, stream=0))


@pytest.fixture
def random_square_pattern():
    rng = np.random.default_rng(50)
    return PointPattern.from_array(
        rng.random((50, 2)), Window(x0=0, y0=0, x1=1, y1=1)
    )


@pytest.fixture
def runner():
    return ReplicationRunner(workers=1, chunk_size=4)


@pytest.fixture
def small_window():
    return Window(x0=0, y0=0, x1=4, y1=4)


@pytest.fixture
def small_poisson(small_window):
    return ModelSpec.poisson(small_window, 2.0)
