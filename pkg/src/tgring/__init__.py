"""Exact arithmetic in the quantum Grothendieck ring of a simply-laced quantum loop algebra."""

__version__ = "0.1.0"
