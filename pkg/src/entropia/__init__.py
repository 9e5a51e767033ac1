"""Degree growth and entropy of Hietarinta-Viallet type recurrences, with exact instance checks."""

__version__ = "0.1.0"
