"""Named 3-fold constructions and the realization solver."""
