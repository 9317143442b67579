"""Utility functions."""

from .names import default_identity, format_name

__all__ = ["default_identity", "format_name"]
