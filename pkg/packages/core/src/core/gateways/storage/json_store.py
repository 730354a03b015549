"""
JSON files for model specifications, calibrations and test reports.
"""

from pathlib import Path
from typing import TypeVar

import structlog
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from ...domain.entities.calibration import Calibration
from ...domain.entities.exceptions import DataFormatError
from ...domain.value_objects.model_spec import ModelSpec

logger = structlog.get_logger(__name__)

M = TypeVar("M", bound=BaseModel)


class JsonStore:
    def read(self, path: Path, model_type: type[M]) -> M:
        try:
            raw = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise DataFormatError(str(path), None, str(e)) from e
        try:
            return model_type.model_validate_json(raw)
        except PydanticValidationError as e:
            first = e.errors()[0]
            location = ".".join(str(part) for part in first.get("loc", ()))
            message = first.get("msg", str(e))
            raise DataFormatError(
                str(path), None, f"{location}: {message}" if location else message
            ) from e

    def write(self, path: Path, value: BaseModel) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(value.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.debug("json_written", path=str(path), kind=type(value).__name__)

    def read_model(self, path: Path) -> ModelSpec:
        return self.read(path, ModelSpec)

    def read_calibration(self, path: Path) -> Calibration:
        return self.read(path, Calibration)
