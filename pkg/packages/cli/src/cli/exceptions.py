"""Exit codes and typed error mapping for CLI commands."""

from core.domain.entities.exceptions import (
    InvalidModelError,
    TdaGofError,
    ValidationError,
)
from pydantic import ValidationError as PydanticValidationError

EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_DATA = 3

USAGE_ERRORS = (ValidationError, InvalidModelError)
DATA_ERRORS = (TdaGofError, PydanticValidationError)


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, USAGE_ERRORS):
        return EXIT_USAGE
    if isinstance(error, DATA_ERRORS):
        return EXIT_DATA
    return EXIT_ERROR
