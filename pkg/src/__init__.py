"""Source package for the hexagonal-grid isoperimetry project."""
