"""Exact computations with Z[x] lattices and binomial difference ideals."""
