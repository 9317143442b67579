"""Test suite for spaneq."""
