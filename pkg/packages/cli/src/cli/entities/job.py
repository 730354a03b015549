"""
Job entities describing one CLI invocation.
"""

from pathlib import Path
from typing import Any

from core.domain.enums import ModelVariant
from core.domain.value_objects.model_spec import (
    DEFAULT_STRAUSS_BURNIN,
    DEFAULT_STRAUSS_CHAIN,
    ModelSpec,
)
from core.domain.value_objects.window import Window
from pydantic import BaseModel, Field, model_validator


class ModelFlags(BaseModel):
    """Model parameters as given on the command line.

    Only the parameters of ``variant`` are required; the rest are ignored.
    """

    variant: ModelVariant
    window: Window
    intensity: float | None = Field(default=None, ge=0)
    kappa: float | None = Field(default=None, ge=0)
    mu: float | None = Field(default=None, ge=0)
    beta: float | None = Field(default=None, gt=0)
    gamma: float | None = Field(default=None, ge=0, le=1)
    radius: float | None = Field(default=None, gt=0)
    chain: int = Field(default=DEFAULT_STRAUSS_CHAIN, ge=0)
    burnin: int = Field(default=DEFAULT_STRAUSS_BURNIN, ge=0)

    @model_validator(mode="after")
    def check_required(self) -> "ModelFlags":
        required = {
            ModelVariant.POISSON: ("intensity",),
            ModelVariant.MATERN: ("kappa", "radius", "mu"),
            ModelVariant.STRAUSS: ("beta", "gamma", "radius"),
        }[self.variant]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{name}" for name in missing)
            raise ValueError(f"model '{self.variant.value}' needs {flags}")
        return self

    def to_model(self) -> ModelSpec:
        if self.variant is ModelVariant.POISSON:
            assert self.intensity is not None
            return ModelSpec.poisson(self.window, self.intensity)
        if self.variant is ModelVariant.MATERN:
            assert self.kappa is not None and self.radius is not None
            assert self.mu is not None
            return ModelSpec.matern(self.window, self.kappa, self.radius, self.mu)
        assert self.beta is not None and self.gamma is not None
        assert self.radius is not None
        return ModelSpec.strauss(
            self.window,
            self.beta,
            self.gamma,
            self.radius,
            chain=self.chain,
            burnin=self.burnin,
        )


class JobSpec(BaseModel):
    """One subcommand run: what it reads, what it writes and how it is seeded."""

    subcommand: str
    inputs: list[Path] = Field(default_factory=list)
    outputs: list[Path] = Field(default_factory=list)
    window: Window | None = None
    seed: int | None = Field(default=None, ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_paths(self) -> "JobSpec":
        resolved_inputs = {p.resolve() for p in self.inputs}
        resolved_outputs = [p.resolve() for p in self.outputs]
        clobbered = [p for p in resolved_outputs if p in resolved_inputs]
        if clobbered:
            raise ValueError(f"output would overwrite input {clobbered[0]}")
        if len(set(resolved_outputs)) != len(resolved_outputs):
            raise ValueError("two outputs share one path")
        return self

    def log_context(self) -> dict[str, Any]:
        context: dict[str, Any] = {"subcommand": self.subcommand}
        if self.seed is not None:
            context["seed"] = self.seed
        if self.window is not None:
            context["window"] = self.window.to_flag()
        return context
