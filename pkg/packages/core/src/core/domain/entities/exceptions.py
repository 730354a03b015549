"""
Custom exception types for the tdagof library.
"""

from typing import Any


class TdaGofError(Exception):

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ConfigurationError(TdaGofError):

    def __init__(self, operation: str, message: str | None = None):
        msg = message or f"Configuration error during {operation}"
        super().__init__(msg, {"operation": operation})


class ValidationError(TdaGofError):

    def __init__(self, field: str, value: Any, message: str | None = None):
        msg = message or f"Validation error for field '{field}' with value '{value}'"
        super().__init__(msg, {"field": field, "value": value})


class DuplicatePointError(TdaGofError):
    """Raised when a point pattern repeats a location.

    ``index`` is the later occurrence, ``duplicate_of`` the first one.
    """

    def __init__(self, index: int, duplicate_of: int, message: str | None = None):
        msg = message or (
            f"Point {index} duplicates point {duplicate_of}; "
            "patterns must have pairwise distinct points"
        )
        super().__init__(msg, {"index": index, "duplicate_of": duplicate_of})


class GeometryError(TdaGofError):

    def __init__(self, operation: str, message: str | None = None):
        msg = message or f"Degenerate geometry during {operation}"
        super().__init__(msg, {"operation": operation})


class InvalidModelError(TdaGofError):

    def __init__(self, variant: str, message: str | None = None):
        msg = message or f"Invalid parameters for point process model '{variant}'"
        super().__init__(msg, {"variant": variant})


class DegenerateCalibrationError(TdaGofError):

    def __init__(self, statistic: str, message: str | None = None):
        msg = message or (
            f"zero-variance null: calibration of '{statistic}' cannot standardize"
        )
        super().__init__(msg, {"statistic": statistic})


class WindowMismatchError(TdaGofError):

    def __init__(self, expected: Any, actual: Any, message: str | None = None):
        msg = message or f"Window mismatch: expected {expected}, got {actual}"
        super().__init__(msg, {"expected": expected, "actual": actual})


class GridMismatchError(TdaGofError):

    def __init__(self, expected: int, actual: int, message: str | None = None):
        msg = message or (
            f"Curve grid mismatch: expected {expected} values, got {actual}"
        )
        super().__init__(msg, {"expected": expected, "actual": actual})


class DataFormatError(TdaGofError):

    def __init__(self, path: str, line: int | None, error: str):
        where = f"{path}:{line}" if line is not None else path
        super().__init__(
            f"Malformed data in {where}: {error}",
            {"path": path, "line": line, "error": error},
        )
