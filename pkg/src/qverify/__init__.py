"""Exact verification of partition identities by series expansion and enumeration."""

__version__ = "0.1.0"
