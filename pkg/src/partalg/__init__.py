"""Exact computation in the partition algebra."""

__version__ = "0.1.0"
