from .calibration import Calibration, EnvelopeReport, RejectionSummary, TestReport
from .exceptions import (
    ConfigurationError,
    DataFormatError,
    DegenerateCalibrationError,
    DuplicatePointError,
    GeometryError,
    GridMismatchError,
    InvalidModelError,
    TdaGofError,
    ValidationError,
    WindowMismatchError,
)
from .filtration import AlphaFiltration
from .persistence import Feature, PersistenceDiagram
from .point_pattern import PointPattern
from .summary import MeanCurve, SummaryCurve, SummarySurface
from .triangulation import Triangulation

__all__ = [
    "AlphaFiltration",
    "Calibration",
    "ConfigurationError",
    "DataFormatError",
    "DegenerateCalibrationError",
    "DuplicatePointError",
    "EnvelopeReport",
    "Feature",
    "GeometryError",
    "GridMismatchError",
    "InvalidModelError",
    "MeanCurve",
    "PersistenceDiagram",
    "PointPattern",
    "RejectionSummary",
    "SummaryCurve",
    "SummarySurface",
    "TdaGofError",
    "TestReport",
    "Triangulation",
    "ValidationError",
    "WindowMismatchError",
]
