"""Pure domain services: no I/O, no gateway or repository dependencies."""
