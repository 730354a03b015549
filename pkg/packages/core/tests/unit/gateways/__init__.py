"""Gateways tests package."""
