"""The equivalence-fusion category and its projections."""
