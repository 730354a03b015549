"""Gateways to external storage."""
