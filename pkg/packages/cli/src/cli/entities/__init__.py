"""
CLI entities using Pydantic for validation.
"""

from .job import JobSpec, ModelFlags

__all__ = [
    "JobSpec",
    "ModelFlags",
]
