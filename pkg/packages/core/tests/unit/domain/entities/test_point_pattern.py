import numpy as np
import pytest
from core.domain.entities.exceptions import DuplicatePointError
from core.domain.entities.point_pattern import PointPattern
from core.domain.value_objects.window import Window
from pydantic import ValidationError

WINDOW = Window(x0=0, y0=0, x1=2, y1=1)


class TestPointPattern:

    def test_it_builds_from_an_array(self):
        pattern = PointPattern.from_array(np.array([[0.5, 0.5], [2.0, 1.0]]), WINDOW)

        assert pattern.points == ((0.5, 0.5), (2.0, 1.0))
        assert len(pattern) == 2
        assert pattern.intensity == 1.0

    def test_it_accepts_an_empty_array(self):
        assert len(PointPattern.from_array(np.empty((0, 2)), WINDOW)) == 0

    def test_it_exposes_read_only_coordinates(self):
        pattern = PointPattern(points=((0.1, 0.2),), window=WINDOW)

        with pytest.raises(ValueError):
            pattern.coordinates[0, 0] = 1.0

    def test_it_rejects_points_outside_the_window(self):
        with pytest.raises(ValidationError, match="point 1"):
            PointPattern(points=((0.0, 0.0), (2.5, 0.5)), window=WINDOW)

    def test_it_names_both_copies_of_a_duplicate(self):
        with pytest.raises(DuplicatePointError) as error:
            PointPattern(points=((0.1, 0.1), (0.3, 0.3), (0.1, 0.1)), window=WINDOW)

        assert error.value.details["index"] == 2
        assert error.value.details["duplicate_of"] == 0

    def test_it_compares_by_points_and_window(self):
        first = PointPattern(points=((0.1, 0.1),), window=WINDOW)
        assert first.coordinates.shape == (1, 2)

        assert first == PointPattern(points=((0.1, 0.1),), window=WINDOW)
