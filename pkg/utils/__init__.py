"""Constants, configuration and errors shared by all chernforge modules."""
