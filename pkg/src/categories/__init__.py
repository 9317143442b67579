"""Finite categories: laws, constructions, equivalences and search."""
