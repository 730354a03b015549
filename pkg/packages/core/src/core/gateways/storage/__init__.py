"""File storage for patterns, diagrams, curves and reports."""

from .csv_store import CsvStore, format_number
from .json_store import JsonStore

__all__ = ["CsvStore", "JsonStore", "format_number"]
