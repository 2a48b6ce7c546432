"""Todd-genus growth and the Kahler-type obstruction."""
