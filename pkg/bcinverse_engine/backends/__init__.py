"""Predicate backends: exhaustive enumeration for finite rings and exact linear algebra for matrix rings."""
