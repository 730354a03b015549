"""Domain tests package."""
