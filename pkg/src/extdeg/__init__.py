"""Degree functions (deg, adeg, sdeg, hdeg) of graded quotients F/U."""

__version__ = "0.1.0"
