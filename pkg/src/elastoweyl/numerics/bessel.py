"""Bessel functions of the first kind, integer order.

Small arguments use the ascending series; everything else goes through
Miller's backward recurrence normalised with the Neumann sum
``J_0(x) + 2 * sum_k J_{2k}(x) = 1``.  The table routine evaluates all
orders ``0..nmax`` at once for a whole array of arguments, which is what the
disk secular equations need.
"""

import math

import numpy as np

# J_n(x) ~ (x/2)^n / n! only underflows gracefully below these bounds
MAX_ORDER = 5000
MAX_ARGUMENT = 5000.0

_SERIES_CUTOFF = 2.0
_RESCALE = 1e250


class BesselRangeError(ValueError):
    """Raised for arguments that the recurrences cannot handle safely."""


def _check_range(n, x):
    if n < 0:
        raise BesselRangeError(f"order must be non-negative, got {n}")
    if n > MAX_ORDER:
        raise BesselRangeError(f"order {n} exceeds supported maximum {MAX_ORDER}")
    xmax = float(np.max(x)) if np.size(x) else 0.0
    xmin = float(np.min(x)) if np.size(x) else 0.0
    if xmin < 0:
        raise BesselRangeError("argument must be non-negative")
    if not np.isfinite(xmax) or xmax > MAX_ARGUMENT:
        raise BesselRangeError(f"argument {xmax} exceeds supported maximum {MAX_ARGUMENT}")


def _series(n, x):
    # sum_m (-1)^m (x/2)^(2m+n) / (m! (m+n)!)
    half = 0.5 * x
    term = half**n / math.factorial(n)
    total = term
    q = -half * half
    m = 0
    while abs(term) > 1e-17 * abs(total) or m < 2:
        m += 1
        term *= q / (m * (m + n))
        total += term
        if m > 200:
            break
    return total


def _start_order(nmax, xmax):
    # even starting order well above both the requested order and the argument
    top = max(nmax, int(xmax))
    start = top + 20 + int(math.sqrt(40.0 * (top + 1)))
    return start + (start % 2)


def bessel_j_table(nmax, x):
    """Return ``J_n(x)`` for ``n = 0..nmax`` as an array of shape ``(nmax+1,) + x.shape``.

    Parameters
    ----------
    nmax : int
        Largest order required.
    x : array_like
        Non-negative arguments.
    """
    x = np.asarray(x, dtype=float)
    _check_range(nmax, x)
    shape = x.shape
    xf = x.ravel()
    out = np.zeros((nmax + 1, xf.size))
    zero = xf == 0.0
    out[0, zero] = 1.0
    pos = ~zero
    if not pos.any():
        return out.reshape((nmax + 1,) + shape)

    xp = xf[pos]
    start = _start_order(nmax, xp.max())
    vals = np.zeros((nmax + 1, xp.size))
    j_next = np.zeros_like(xp)
    j_cur = np.full_like(xp, 1e-30)
    norm = np.zeros_like(xp)
    two_over_x = 2.0 / xp
    for k in range(start, 0, -1):
        # j_cur holds J_k, produce J_{k-1}
        if k <= nmax:
            vals[k] = j_cur
        if k % 2 == 0:
            norm += 2.0 * j_cur
        j_prev = k * two_over_x * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        big = np.abs(j_cur) > _RESCALE
        if big.any():
            scale = np.where(big, 1.0 / _RESCALE, 1.0)
            j_cur = j_cur * scale
            j_next = j_next * scale
            norm = norm * scale
            vals *= scale
    vals[0] = j_cur
    norm += j_cur
    vals /= norm
    out[:, pos] = vals
    return out.reshape((nmax + 1,) + shape)


def bessel_j(n, x):
    """Bessel function ``J_n(x)`` for integer ``n >= 0`` and real ``x >= 0``.

    Scalars use the ascending series when ``x < 2``; arrays and larger
    arguments use the normalised backward recurrence.
    """
    n = int(n)
    if np.ndim(x) == 0:
        xv = float(x)
        _check_range(n, np.array([xv]))
        if xv == 0.0:
            return 1.0 if n == 0 else 0.0
        if xv < _SERIES_CUTOFF:
            return _series(n, xv)
        return float(bessel_j_table(n, np.array([xv]))[n, 0])
    return bessel_j_table(n, x)[n]


def bessel_j_derivative_table(table, x):
    """Derivatives ``J_n'(x)`` for ``n = 0..nmax-1`` from a table of ``J_0..J_nmax``.

    Uses ``J_n' = (J_{n-1} - J_{n+1}) / 2`` with ``J_{-1} = -J_1``.
    """
    table = np.asarray(table)
    deriv = np.empty((table.shape[0] - 1,) + table.shape[1:])
    deriv[0] = -table[1]
    deriv[1:] = 0.5 * (table[:-2] - table[2:])
    return deriv
