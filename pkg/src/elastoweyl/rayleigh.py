"""Rayleigh's cubic and the surface wave speed factor ``gamma_R``.

For ``alpha`` in ``(0, 1)`` the cubic

    R(w) = w^3 - 8 w^2 + 8 (3 - 2 alpha) w + 16 (alpha - 1)

has exactly one root ``w1`` in ``(0, 1)``; the Rayleigh wave travels at
``sqrt(mu * w1)``.  The other two roots are complex conjugate below a
critical ``alpha*``, coincide at it, and are distinct reals above it.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache


def rayleigh_cubic(alpha, w):
    """Value of the Rayleigh cubic at ``w`` (real or complex, scalar or array)."""
    return ((w - 8.0) * w + 8.0 * (3.0 - 2.0 * alpha)) * w + 16.0 * (alpha - 1.0)


def rayleigh_equivalent(alpha, w):
    """``4 sqrt((1 - alpha w)(1 - w)) - (w - 2)^2``, which shares the root ``w1``."""
    return 4.0 * math.sqrt((1.0 - alpha * w) * (1.0 - w)) - (w - 2.0) ** 2


def _bisect(f, lo, hi, tol=1e-15, maxiter=200):
    flo = f(lo)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=None)
def critical_alpha():
    """``alpha*``: the root in ``(0, 1)`` of ``a^3 - 107/64 a^2 + 31/32 a - 11/64``."""
    p = lambda a: ((a - 107.0 / 64.0) * a + 31.0 / 32.0) * a - 11.0 / 64.0
    return _bisect(p, 0.0, 1.0, tol=1e-16)


@dataclass(frozen=True)
class RayleighRoots:
    alpha: float
    w1: float
    w2: complex
    w3: complex
    case_tag: str  # "complex_pair", "double_real" or "distinct_real"

    @property
    def gamma_r(self):
        return math.sqrt(self.w1)

    @property
    def roots(self):
        return (complex(self.w1), self.w2, self.w3)


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")


def rayleigh_w1(alpha):
    """The distinguished real root ``w1 = gamma_R^2`` in ``(0, 1)``."""
    _check_alpha(alpha)
    # R(0) = 16(alpha - 1) < 0 and R(1) = 1 > 0
    return _bisect(lambda w: rayleigh_cubic(alpha, w), 0.0, 1.0)


def rayleigh_roots(alpha):
    """All three roots of the Rayleigh cubic with their classification."""
    w1 = rayleigh_w1(alpha)
    # R(w) = (w - w1)(w^2 + p w + q)
    p = w1 - 8.0
    q = w1 * p + 8.0 * (3.0 - 2.0 * alpha)
    disc = p * p - 4.0 * q
    if abs(disc) < 1e-12 * max(1.0, p * p) or abs(alpha - critical_alpha()) < 1e-14:
        w2 = w3 = complex(-0.5 * p)
        tag = "double_real"
    elif disc < 0:
        r = cmath.sqrt(disc)
        w2, w3 = (-p + r) / 2.0, (-p - r) / 2.0
        tag = "complex_pair"
    else:
        r = math.sqrt(disc)
        w2, w3 = complex((-p - r) / 2.0), complex((-p + r) / 2.0)
        tag = "distinct_real"
    return RayleighRoots(alpha, w1, complex(w2), complex(w3), tag)


def gamma_r(alpha):
    return math.sqrt(rayleigh_w1(alpha))
