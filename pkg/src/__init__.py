"""spaneq - executable span equivalence, equivalence fusion and algebra checks."""
