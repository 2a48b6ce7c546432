"""Reports of evaluated constructions."""
