"""
CSV files for point patterns, persistence diagrams and plot-ready curves.
"""

import csv
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

import numpy as np
import structlog
from pydantic import ValidationError as PydanticValidationError

from ...domain.entities.calibration import EnvelopeReport, TestReport
from ...domain.entities.exceptions import DataFormatError
from ...domain.entities.persistence import Feature, PersistenceDiagram
from ...domain.entities.point_pattern import PointPattern
from ...domain.entities.summary import MeanCurve, SummaryCurve, SummarySurface
from ...domain.value_objects.window import Window

logger = structlog.get_logger(__name__)

PATTERN_HEADER = ("x", "y")
DIAGRAM_HEADER = ("dim", "birth", "death", "standard_birth", "killer")
CURVE_HEADER = ("arg", "value")
SURFACE_HEADER = ("b", "l", "value")
ENVELOPE_HEADER = ("arg", "observed", "lower", "upper")
MEAN_CURVE_HEADER = ("arg", "mean", "sd")
SWEEP_HEADER = ("r", "value", "z", "p_value", "reject")


def format_number(value: float) -> str:
    """Positional decimal with 17 significant digits, trailing zeros trimmed.

    Seventeen digits make every double survive a write/read cycle exactly.
    """
    value = float(value)
    if value == 0:
        return "0"
    return np.format_float_positional(
        value, precision=17, unique=False, fractional=False, trim="-"
    )


class CsvStore:
    """Reads and writes the comma-separated artifacts of a study.

    Files are UTF-8 with LF line endings and a single header row.
    """

    def read_pattern(self, path: Path, window: Window) -> PointPattern:
        rows = self._read_rows(path, PATTERN_HEADER)
        coords = []
        for line, row in rows:
            x, y = (self._number(path, line, cell) for cell in row)
            coords.append((x, y))
        try:
            pattern = PointPattern(points=tuple(coords), window=window)
        except PydanticValidationError as e:
            raise DataFormatError(str(path), None, _first_error(e)) from e
        logger.debug("pattern_loaded", path=str(path), n=len(pattern))
        return pattern

    def write_pattern(self, path: Path, pattern: PointPattern) -> None:
        self._write_rows(
            path,
            PATTERN_HEADER,
            ((format_number(x), format_number(y)) for x, y in pattern.points),
        )

    def read_diagram(
        self, path: Path, M: float, r_f: float, window: Window | None = None
    ) -> PersistenceDiagram:
        features = []
        for line, row in self._read_rows(path, DIAGRAM_HEADER):
            dim_cell, birth_cell, death_cell, standard_cell, killer_cell = row
            if dim_cell not in ("0", "1"):
                raise DataFormatError(str(path), line, f"bad dimension '{dim_cell}'")
            dimension = int(dim_cell)
            try:
                killer = tuple(int(part) for part in killer_cell.split(":"))
                features.append(
                    Feature(
                        dimension=dimension,  # type: ignore[arg-type]
                        birth=self._number(path, line, birth_cell),
                        death=self._number(path, line, death_cell),
                        standard_birth=self._number(path, line, standard_cell),
                        killer=killer,
                    )
                )
            except ValueError as e:
                raise DataFormatError(str(path), line, _first_error(e)) from e
        try:
            return PersistenceDiagram(
                features=tuple(features), M=M, r_f=r_f, window=window
            )
        except PydanticValidationError as e:
            raise DataFormatError(str(path), None, _first_error(e)) from e

    def write_diagram(self, path: Path, diagram: PersistenceDiagram) -> None:
        self._write_rows(
            path,
            DIAGRAM_HEADER,
            (
                (
                    str(f.dimension),
                    format_number(f.birth),
                    format_number(f.death),
                    format_number(f.standard_birth),
                    ":".join(str(i) for i in f.killer),
                )
                for f in diagram.features
            ),
        )

    def write_curve(self, path: Path, curve: SummaryCurve) -> None:
        self._write_rows(
            path,
            CURVE_HEADER,
            (
                (format_number(g), format_number(v))
                for g, v in zip(curve.grid, curve.values, strict=True)
            ),
        )

    def read_curve(self, path: Path) -> tuple[np.ndarray, np.ndarray]:
        rows = [
            tuple(self._number(path, line, cell) for cell in row)
            for line, row in self._read_rows(path, CURVE_HEADER)
        ]
        table = np.array(rows, dtype=float).reshape(-1, 2)
        return table[:, 0], table[:, 1]

    def write_surface(self, path: Path, surface: SummarySurface) -> None:
        self._write_rows(
            path,
            SURFACE_HEADER,
            (
                (format_number(b), format_number(life), str(count))
                for b, row in zip(surface.b_grid, surface.values, strict=True)
                for life, count in zip(surface.l_grid, row, strict=True)
            ),
        )

    def write_envelope(self, path: Path, report: EnvelopeReport) -> None:
        self._write_rows(
            path,
            ENVELOPE_HEADER,
            (
                tuple(format_number(v) for v in values)
                for values in zip(
                    report.grid,
                    report.observed,
                    report.lower,
                    report.upper,
                    strict=True,
                )
            ),
        )

    def write_mean_curve(self, path: Path, curve: MeanCurve) -> None:
        self._write_rows(
            path,
            MEAN_CURVE_HEADER,
            (
                tuple(format_number(v) for v in values)
                for values in zip(curve.grid, curve.mean, curve.sd, strict=True)
            ),
        )

    def write_sweep(self, path: Path, reports: Sequence[TestReport]) -> None:
        self._write_rows(
            path,
            SWEEP_HEADER,
            (
                (
                    format_number(report.statistic.r),
                    format_number(report.value),
                    format_number(report.z),
                    format_number(report.p_value),
                    str(int(report.reject)),
                )
                for report in reports
            ),
        )

    @staticmethod
    def _number(path: Path, line: int, cell: str) -> float:
        try:
            value = float(cell)
        except ValueError as e:
            raise DataFormatError(str(path), line, f"not a number: '{cell}'") from e
        if not np.isfinite(value):
            raise DataFormatError(str(path), line, f"not a finite number: '{cell}'")
        return value

    @staticmethod
    def _read_rows(
        path: Path, header: Sequence[str]
    ) -> Iterator[tuple[int, list[str]]]:
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise DataFormatError(str(path), None, str(e)) from e

        reader = csv.reader(text.splitlines())
        first = next(reader, None)
        if first is None or [cell.strip() for cell in first] != list(header):
            raise DataFormatError(
                str(path), 1, f"expected header '{','.join(header)}'"
            )
        rows = []
        for line, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise DataFormatError(
                    str(path), line, f"expected {len(header)} fields, got {len(row)}"
                )
            rows.append((line, [cell.strip() for cell in row]))
        return iter(rows)

    @staticmethod
    def _write_rows(
        path: Path, header: Sequence[str], rows: Iterable[Sequence[str]]
    ) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)


def _first_error(error: ValueError) -> str:
    if isinstance(error, PydanticValidationError):
        first = error.errors()[0]
        return str(first.get("msg", error))
    return str(error)
