"""Table reproduction and conjecture sweeps."""
