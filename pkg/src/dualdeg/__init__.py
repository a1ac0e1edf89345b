"""Exact combinatorics of Bernstein degrees for the classical dual pairs."""

from .degree import DegreeReport, bernstein_degree, hilbert_report, verify_all
from .dualpair import Setting, mp, ostar, upq

__all__ = [
    "DegreeReport",
    "Setting",
    "bernstein_degree",
    "hilbert_report",
    "mp",
    "ostar",
    "upq",
    "verify_all",
]
