"""Domain value objects tests package."""
