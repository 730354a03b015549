"""Tests package for core."""
