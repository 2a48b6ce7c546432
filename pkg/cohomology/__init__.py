"""Finite graded cohomology rings used as an independent Chern-number oracle."""
