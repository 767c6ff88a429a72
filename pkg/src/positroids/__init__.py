"""Exact combinatorics of Richardson and positroid varieties."""

__version__ = "0.1.0"
