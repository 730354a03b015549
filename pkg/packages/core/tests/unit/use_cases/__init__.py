"""Use cases tests package."""
