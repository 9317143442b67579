"""Bounded free-category monad and its algebras."""
