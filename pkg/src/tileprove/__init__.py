"""Exact searches, constructions and verdicts for N-tilings of a triangle by congruent triangles."""

__version__ = "0.1.0"
