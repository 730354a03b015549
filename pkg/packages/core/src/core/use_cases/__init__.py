"""Use cases layer."""
