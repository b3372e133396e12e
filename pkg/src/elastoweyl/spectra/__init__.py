"""Exact eigenvalue counting functions of model domains."""

from .counting import CountingFunction
from .cylinder import cylinder_secular, cylinder_spectrum, lamb_determinants, sum_two_squares
from .disk import disk_secular, disk_spectrum

__all__ = [
    "CountingFunction", "cylinder_secular", "cylinder_spectrum", "lamb_determinants",
    "sum_two_squares", "disk_secular", "disk_spectrum",
]
