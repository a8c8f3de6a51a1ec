"""Kummer cubic fields over biquadratic CM fields and their 3-class groups."""

__version__ = "0.1.0"
