"""Exact invariants of 4-manifolds and almost-complex 6-manifolds."""
