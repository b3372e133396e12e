"""First and second Weyl coefficients of the Lamé operator.

For a domain in R^d the eigenvalue counting function behaves like

    N(Lambda) = a Vol(Omega) Lambda^{d/2} + b Vol(boundary) Lambda^{(d-1)/2} + o(...)

with ``b`` depending on the boundary condition.  The second coefficients
are available as one-dimensional integrals in every dimension, and in odd
dimensions ``d = 2k + 1`` as closed forms built from the ``k``-th Taylor
coefficient of explicit algebraic functions.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .numerics.quadrature import quad
from .numerics.series import PowerSeries, ps_sqrt, variable
from .rayleigh import rayleigh_cubic, rayleigh_w1

DEFAULT_TOL = 1e-10


def gamma_half(x):
    """Gamma function at a positive integer or half-integer ``x``.

    Uses the recurrence from ``Gamma(1) = 1`` and ``Gamma(1/2) = sqrt(pi)``.
    """
    twice = round(2 * x)
    if twice <= 0 or abs(2 * x - twice) > 1e-12:
        raise ValueError(f"gamma_half needs a positive multiple of 1/2, got {x}")
    if twice % 2 == 0:
        return float(math.factorial(twice // 2 - 1))
    g = math.sqrt(math.pi)
    for j in range(1, twice // 2 + 1):
        g *= j - 0.5
    return g


def _unit_sphere_area(n):
    """Area of the unit sphere S^n embedded in R^{n+1}; ``S^0`` has two points."""
    return 2.0 * math.pi ** ((n + 1) / 2.0) / gamma_half((n + 1) / 2.0)


def weyl_a(m):
    """Leading Weyl constant ``a``."""
    d = m.dim
    num = (d - 1) / m.mu ** (d / 2.0) + 1.0 / m.p_modulus ** (d / 2.0)
    return num / ((4.0 * math.pi) ** (d / 2.0) * gamma_half(1.0 + d / 2.0))


def _b_prefactor(m):
    d = m.dim
    return m.mu ** ((1.0 - d) / 2.0) / (
        2.0 ** (d + 1) * math.pi ** ((d - 1) / 2.0) * gamma_half((d + 1) / 2.0)
    )


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")


# Integrands in t = tau^{-2} on (1, 1/alpha).  They receive the distances
# da = t - 1 and db = 1/alpha - t so that the square root is accurate at
# both ends: (1 - alpha t)(t - 1) = alpha * db * da.


def _dir_kernel(alpha):
    def g(t, da, db):
        return np.arctan(np.sqrt(alpha * db * da))
    return g


def _free_kernel(alpha):
    def g(t, da, db):
        return np.arctan2((t - 2.0) ** 2, 4.0 * np.sqrt(alpha * db * da))
    return g


def _t_integral(kernel, alpha, power, tol, split=None):
    """``int_1^{1/alpha} kernel(t) t^{-power} dt``, optionally split at ``split``."""
    hi = 1.0 / alpha

    def f(t, da, db):
        return kernel(t, da, db) * t ** (-power)

    if split is None or not 1.0 < split < hi:
        return quad(f, 1.0, hi, tol, distances=True)
    # recover the global distances inside each panel
    left = lambda t, da, db: f(t, da, hi - t)
    right = lambda t, da, db: f(t, t - 1.0, db)
    v1, e1 = quad(left, 1.0, split, tol / 2, distances=True)
    v2, e2 = quad(right, split, hi, tol / 2, distances=True)
    return v1 + v2, e1 + e2


def dir_tau_integral(alpha, d, tol=DEFAULT_TOL):
    """``int_{sqrt(alpha)}^1 tau^{d-2} arctan(sqrt((1 - alpha/tau^2)(1/tau^2 - 1))) dtau``."""
    _check_alpha(alpha)
    v, e = _t_integral(_dir_kernel(alpha), alpha, (d + 1) / 2.0, 2.0 * tol)
    return 0.5 * v, 0.5 * e


def free_tau_integral(alpha, d, tol=DEFAULT_TOL):
    """The free boundary analogue with ``arctan((1/tau^2 - 2)^2 / (4 sqrt(...)))``."""
    _check_alpha(alpha)
    v, e = _t_integral(_free_kernel(alpha), alpha, (d + 1) / 2.0, 2.0 * tol, split=2.0)
    return 0.5 * v, 0.5 * e


def b_dir_quadrature(m, tol=DEFAULT_TOL):
    """Second Dirichlet coefficient by numerical integration.

    Raises
    ------
    QuadratureError
        If the integral does not converge to ``tol``.
    """
    d, alpha = m.dim, m.alpha
    integral, _ = dir_tau_integral(alpha, d, tol)
    bracket = 4.0 * (d - 1) / math.pi * integral + alpha ** ((d - 1) / 2.0) + d - 1
    return -_b_prefactor(m) * bracket


def b_free_quadrature(m, tol=DEFAULT_TOL):
    """Second free boundary coefficient by numerical integration."""
    d, alpha = m.dim, m.alpha
    integral, _ = free_tau_integral(alpha, d, tol)
    gamma_r = math.sqrt(rayleigh_w1(alpha))
    bracket = (
        4.0 * (d - 1) / math.pi * integral
        + alpha ** ((d - 1) / 2.0) + d - 5 + 4.0 * gamma_r ** (1 - d)
    )
    return _b_prefactor(m) * bracket


# --- odd dimensions -------------------------------------------------------


def _radical_series(alpha, k):
    """Series of ``sqrt((1 - alpha t)(1 - t))``."""
    return ps_sqrt(PowerSeries.from_poly([1.0, -(1.0 + alpha), alpha], k))


def dir_series_coefficient(alpha, k):
    """``[t^k] (2t - c) / ((t - c) sqrt((1 - alpha t)(1 - t)))`` with ``c = (alpha+1)/alpha``."""
    _check_alpha(alpha)
    t = variable(k)
    c = (alpha + 1.0) / alpha
    return ((2.0 * t - c) / ((t - c) * _radical_series(alpha, k)))[k]


def free_series_coefficient(alpha, k):
    """``[t^k]`` of the algebraic function entering the odd free coefficient.

    The function is ``P(t) (4 s + (t-2)^2) / ((t-2) R(t) s)`` with
    ``s = sqrt((1 - alpha t)(1 - t))``, ``P = 2 alpha t^2 + (alpha-3) t + 2(1-alpha)``
    and ``R`` the Rayleigh cubic.
    """
    _check_alpha(alpha)
    t = variable(k)
    s = _radical_series(alpha, k)
    p = PowerSeries.from_poly([2.0 * (1.0 - alpha), alpha - 3.0, 2.0 * alpha], k)
    cubic = PowerSeries.from_poly([16.0 * (alpha - 1.0), 8.0 * (3.0 - 2.0 * alpha), -8.0, 1.0], k)
    num = p * (4.0 * s + (t - 2.0) * (t - 2.0))
    den = (t - 2.0) * cubic * s
    return (num / den)[k]


def _odd_k(m):
    if m.dim % 2 == 0:
        raise ValueError(f"closed form needs odd dimension, got d={m.dim}")
    return (m.dim - 1) // 2


def b_dir_odd(m):
    """Closed form of the Dirichlet coefficient in odd dimension ``d = 2k + 1``."""
    k = _odd_k(m)
    alpha = m.alpha
    bracket = (
        2.0 * dir_series_coefficient(alpha, k)
        - 2.0 * (alpha / (alpha + 1.0)) ** k + alpha ** k + 2 * k
    )
    return -_b_prefactor(m) * bracket


def b_free_odd(m):
    """Closed form of the free boundary coefficient in odd dimension ``d = 2k + 1``."""
    k = _odd_k(m)
    alpha = m.alpha
    bracket = (
        -8.0 * free_series_coefficient(alpha, k)
        - alpha ** k + 2.0 * (k + 2.0 ** (2 - k) - 1.0)
    )
    return _b_prefactor(m) * bracket


# --- residue identities ---------------------------------------------------


def oddform_identity_check(alpha, k, bc, tol=DEFAULT_TOL):
    """Both sides of the integral identity behind the odd-dimension closed forms.

    Returns ``(lhs, rhs)``.  The left side is the integral over
    ``t in (1, 1/alpha)`` computed by quadrature; the right side is the
    series expression.

    Dirichlet::

        (2k/pi) int arctan(sqrt((1-alpha t)(t-1))) t^{-k-1} dt
            = [t^k](...) - (alpha/(alpha+1))^k

    Free::

        (4k/pi) int arctan((t-2)^2 / (4 sqrt(...))) t^{-k-1} dt
            = -8 [t^k](...) + 2^{3-k} + 2(1 - alpha^k) - 4 gamma_R^{-2k}
    """
    _check_alpha(alpha)
    if k < 1:
        raise ValueError("k must be at least 1")
    if bc == "dir":
        v, _ = _t_integral(_dir_kernel(alpha), alpha, k + 1.0, tol)
        lhs = 2.0 * k / math.pi * v
        rhs = dir_series_coefficient(alpha, k) - (alpha / (alpha + 1.0)) ** k
    elif bc == "free":
        v, _ = _t_integral(_free_kernel(alpha), alpha, k + 1.0, tol, split=2.0)
        lhs = 4.0 * k / math.pi * v
        w1 = rayleigh_w1(alpha)
        rhs = (
            -8.0 * free_series_coefficient(alpha, k)
            + 2.0 ** (3 - k) + 2.0 * (1.0 - alpha ** k) - 4.0 * w1 ** (-k)
        )
    else:
        raise ValueError(f"bc must be 'dir' or 'free', got {bc!r}")
    return lhs, rhs


# --- assembled coefficients -----------------------------------------------


def liu_b_dir(m):
    """The Dirichlet coefficient without the integral term (an earlier, incorrect value)."""
    d = m.dim
    return -_b_prefactor(m) * (m.alpha ** ((d - 1) / 2.0) + d - 1)


@dataclass(frozen=True)
class WeylCoefficients:
    a: float
    b_dir: float
    b_free: float
    a_heat: float
    b_dir_heat: float
    b_free_heat: float
    b_dir_liu: float
    method_tag: str  # "quadrature" or "closed_form_odd"


def heat_coefficients(c, d):
    """Heat trace normalisation ``(a~, b~_dir, b~_free)`` of counting coefficients."""
    ga = gamma_half(1.0 + d / 2.0)
    gb = gamma_half(1.0 + (d - 1) / 2.0)
    return c.a * ga, c.b_dir * gb, c.b_free * gb


def compute_coefficients(m, method="quadrature", tol=DEFAULT_TOL):
    """All coefficients for ``m``.

    ``method`` is ``"quadrature"`` (any dimension) or ``"closed_form_odd"``.
    """
    if method == "quadrature":
        bd, bf = b_dir_quadrature(m, tol), b_free_quadrature(m, tol)
    elif method == "closed_form_odd":
        bd, bf = b_dir_odd(m), b_free_odd(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    c = WeylCoefficients(weyl_a(m), bd, bf, 0.0, 0.0, 0.0, liu_b_dir(m), method)
    ah, bdh, bfh = heat_coefficients(c, m.dim)
    return replace(c, a_heat=ah, b_dir_heat=bdh, b_free_heat=bfh)
