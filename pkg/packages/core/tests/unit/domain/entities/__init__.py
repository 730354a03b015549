"""Domain entities tests package."""
