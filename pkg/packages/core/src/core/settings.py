"""
Configuration management for tdagof.
"""

import json
import math
import os
from pathlib import Path
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.domain.entities.exceptions import ConfigurationError, ValidationError
from core.domain.value_objects.model_spec import (
    DEFAULT_STRAUSS_BURNIN,
    DEFAULT_STRAUSS_CHAIN,
)
from core.domain.value_objects.statistic_spec import (
    DEFAULT_CURVE_POINTS,
    DEFAULT_SURFACE_POINTS,
)
from core.domain.value_objects.window import Window


class LoggingSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="LOG_")

    level: str = Field(default="WARNING", description="Logging level")
    format: str = Field(default="console", description="Log format (json or console)")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid logging level. Must be one of: {valid_levels}")
        return v.upper()

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        valid_formats = ["json", "console"]
        if v not in valid_formats:
            raise ValueError(f"Invalid log format. Must be one of: {valid_formats}")
        return v


class ComputeSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="TDAGOF_")

    threads: int = Field(
        default=1, ge=1, le=512, description="Worker processes for replications"
    )
    chunk_size: int = Field(
        default=25, ge=1, description="Replications handed to a worker at a time"
    )


class StudyDefaults(BaseSettings):
    """Parameters of the Poisson null study used when a flag is omitted."""

    model_config = SettingsConfigDict(env_prefix="TDAGOF_DEFAULT_")

    window: Window = Field(
        default_factory=lambda: Window(x0=0.0, y0=0.0, x1=10.0, y1=10.0)
    )
    intensity: float = Field(default=2.0, ge=0, description="Null intensity")
    M: float = Field(default=math.sqrt(2) * 10, gt=0, description="Size bound")
    r_final: float = Field(default=1.5, gt=0, description="Final radius r_f")
    r_cluster: float = Field(default=0.1, ge=0, description="Cluster bound r_C")
    r_loop: float = Field(default=0.5, ge=0, description="Loop bound r_L")
    curve_points: int = Field(default=DEFAULT_CURVE_POINTS, ge=2)
    surface_points: int = Field(default=DEFAULT_SURFACE_POINTS, ge=2)
    chain: int = Field(default=DEFAULT_STRAUSS_CHAIN, ge=0)
    burnin: int = Field(default=DEFAULT_STRAUSS_BURNIN, ge=0)
    alpha: float = Field(default=0.05, gt=0, lt=1, description="Test level")


class AppSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="TDAGOF_", env_file=".env", env_file_encoding="utf-8"
    )

    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    compute: ComputeSettings = Field(default_factory=ComputeSettings)
    defaults: StudyDefaults = Field(default_factory=StudyDefaults)

    config_file: str = Field(
        default="tdagof.json", description="Configuration file path"
    )

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self._load_config_file()

    def _load_config_file(self) -> None:
        """Merge the JSON config file section by section.

        Each section present in the file is rebuilt through its settings class
        so values are validated; unknown keys are rejected by validation.
        """
        config_path = Path(self.config_file)
        if not config_path.is_file():
            return

        try:
            with open(config_path) as f:
                raw = json.load(f)

            if isinstance(raw.get("logging"), dict):
                self.logging = LoggingSettings(**raw["logging"])
            if isinstance(raw.get("compute"), dict):
                self.compute = ComputeSettings(**raw["compute"])
            if isinstance(raw.get("defaults"), dict):
                self.defaults = StudyDefaults(**raw["defaults"])

        except Exception as e:
            raise ConfigurationError(
                "load_config_file", f"Failed to load config file: {e}"
            ) from e

    def save_config(self) -> None:
        try:
            config_data = {
                "logging": self.logging.model_dump(),
                "compute": self.compute.model_dump(),
                "defaults": self.defaults.model_dump(),
            }

            config_path = Path(self.config_file)
            config_path.parent.mkdir(parents=True, exist_ok=True)

            with open(config_path, "w") as f:
                json.dump(config_data, f, indent=2)

        except Exception as e:
            raise ConfigurationError(
                "save_config", f"Failed to save config: {e}"
            ) from e

    def validate_settings(self) -> None:
        d = self.defaults
        if d.r_cluster > d.r_final:
            raise ValidationError(
                "r_cluster", d.r_cluster, "r_C must not exceed r_f"
            )
        if d.r_loop > d.r_final:
            raise ValidationError("r_loop", d.r_loop, "r_L must not exceed r_f")
        if d.chain < d.burnin:
            raise ValidationError(
                "chain", d.chain, "Strauss chain must be at least the burn-in"
            )
        if self.compute.threads > (os.cpu_count() or 1) * 4:
            raise ValidationError(
                "threads",
                self.compute.threads,
                "More than four workers per CPU is almost certainly a typo",
            )


settings = AppSettings()
