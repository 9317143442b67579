"""Finite n-globular sets, cell-wise properties and pullbacks."""
