"""Spans of globular maps and span equivalence."""
