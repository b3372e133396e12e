"""Numerical kernels: Bessel functions, power series, quadrature and root scanning."""

from .bessel import BesselRangeError, bessel_j, bessel_j_table
from .quadrature import QuadratureError, quad, quad_panels
from .roots import RootScan, scan_roots, scan_sampled
from .series import PowerSeries, SeriesError, ps_compose_linear, ps_div, ps_mul, ps_sqrt

__all__ = [
    "BesselRangeError", "bessel_j", "bessel_j_table",
    "QuadratureError", "quad", "quad_panels",
    "RootScan", "scan_roots", "scan_sampled",
    "PowerSeries", "SeriesError", "ps_compose_linear", "ps_div", "ps_mul", "ps_sqrt",
]
