"""Elastic eigenvalues of the unit disk.

Displacements ``grad psi1 + curl(z psi2)`` with ``psi_j = J_k(sqrt(omega_j) r) e^{ik theta}``,
``omega1 = Lambda / (lambda + 2mu)`` and ``omega2 = Lambda / mu``, reduce each
angular index ``k`` to a 2x2 boundary determinant at ``r = 1``.  Roots with
``k > 0`` are double eigenvalues (``e^{+ik theta}`` and ``e^{-ik theta}``).
"""

import math

import numpy as np

from ..numerics.bessel import bessel_j_table
from ..numerics.roots import scan_sampled
from ..rayleigh import rayleigh_w1
from ..shift import _check_bc
from .counting import CountingFunction

# rigid motions of the free disk: two translations and one rotation
FREE_ZERO_MODES = 3


class ScanBudgetError(RuntimeError):
    pass


def _args(m, Lambda):
    lam = np.asarray(Lambda, dtype=float)
    return np.sqrt(lam / m.p_modulus), np.sqrt(lam / m.mu)


def _assemble(m, bc, k, a, b, ta, tb):
    """Secular value from Bessel tables ``ta``, ``tb`` holding orders ``k`` and ``k+1``."""
    ja, ja1 = ta[k], ta[k + 1]
    jb, jb1 = tb[k], tb[k + 1]
    if bc == "dir":
        # (k^2 J_k(a) J_k(b) - a b J_k'(a) J_k'(b)) / sqrt(Lambda)
        return (k / math.sqrt(m.mu)) * ja * jb1 + (ja1 / math.sqrt(m.p_modulus)) * (
            k * jb - b * jb1
        )
    # traction determinant divided by mu^2, with x J_k'(x) = k J_k - x J_{k+1}
    dja = k * ja - a * ja1
    djb = k * jb - b * jb1
    b2 = b * b
    rr_p = (2 * k * k - b2) * ja - 2.0 * dja
    rt_s = (b2 - 2 * k * k) * jb + 2.0 * djb
    return rr_p * rt_s + 4.0 * k * k * (djb - jb) * (dja - ja)


def _normalised(k, t, x):
    """Orders ``k`` and ``k+1`` of a Bessel table divided by their Euclidean norm.

    Where both underflow to zero the small argument ratio
    ``J_{k+1}/J_k ~ x / (2k + 2)`` takes over.
    """
    lo, hi = t[k], t[k + 1]
    norm = np.hypot(lo, hi)
    tiny = norm == 0.0
    safe = np.where(tiny, 1.0, norm)
    return {
        k: np.where(tiny, 1.0, lo / safe),
        k + 1: np.where(tiny, x / (2.0 * k + 2.0), hi / safe),
    }


def _scaled(m, bc, k, Lambda, a, b, ta, tb):
    """Secular value with each Bessel family normalised to unit size.

    The determinant is bilinear in the two families, so this divides it by
    a positive factor and keeps samples of order one.
    """
    val = _assemble(m, bc, k, a, b, _normalised(k, ta, a), _normalised(k, tb, b))
    return val / (1.0 + Lambda)


def _determinant(m, bc, k, Lambda):
    a, b = _args(m, Lambda)
    return _assemble(m, bc, k, a, b, bessel_j_table(k + 1, a), bessel_j_table(k + 1, b))


def disk_secular(m, bc, k, Lambda):
    """Secular function of angular index ``k``; its positive roots are eigenvalues.

    Dirichlet returns ``(k^2 J_k(a) J_k(b) - ab J_k'(a) J_k'(b)) / sqrt(Lambda)``
    with ``a = sqrt(omega1)``, ``b = sqrt(omega2)``; for ``k = 0`` this is
    ``-J_1(a) J_1(b) / sqrt(alpha mu)``.  Free returns the traction
    determinant divided by ``mu^2``.
    """
    _check_bc(bc)
    if k < 0 or int(k) != k:
        raise ValueError("k must be a non-negative integer")
    return _determinant(m, bc, int(k), Lambda)


def _scan_function(m, bc, k):
    def f(Lambda):
        Lambda = np.asarray(Lambda, dtype=float)
        a, b = _args(m, Lambda)
        ta, tb = bessel_j_table(k + 1, a), bessel_j_table(k + 1, b)
        return _scaled(m, bc, k, Lambda, a, b, ta, tb)
    return f


def default_step(m):
    """Grid step: one eighth of the Weyl spacing ``1 / (a pi)`` of the disk."""
    from ..weyl import weyl_a

    return 1.0 / (8.0 * math.pi * weyl_a(m.with_dim(2)))


def angular_cutoff(m, bc, lambda_max):
    """Largest ``k`` that can carry an eigenvalue below ``lambda_max``.

    Dirichlet eigenvalues of index ``k`` exceed ``mu (k-1)^2``.  Free branches
    start with a surface wave near ``mu gamma_R^2 k^2``; the bound adds a
    margin for curvature corrections.
    """
    if bc == "dir":
        return int(math.ceil(math.sqrt(lambda_max / m.mu))) + 2
    w1 = rayleigh_w1(m.alpha)
    return int(math.ceil(math.sqrt(lambda_max / (m.mu * w1)))) + 3


def _grid(m, lambda_max, step):
    step = default_step(m) if step is None else step
    lo = 0.5 * step
    n = max(2, int(math.ceil((lambda_max - lo) / step)) + 1)
    return np.linspace(lo, lambda_max, n)


def disk_branch_roots(m, bc, k, lambda_max, step=None, samples=None):
    """Roots of the index-``k`` secular function on ``(0, lambda_max]``.

    ``samples`` may carry precomputed ``(x, a, b, ta, tb)`` with Bessel
    tables covering order ``k + 1``.
    """
    if samples is None:
        x = _grid(m, lambda_max, step)
        a, b = _args(m, x)
        ta, tb = bessel_j_table(k + 1, a), bessel_j_table(k + 1, b)
    else:
        x, a, b, ta, tb = samples
    fx = _scaled(m, bc, k, x, a, b, ta, tb)
    return scan_sampled(_scan_function(m, bc, k), x, fx, xtol=1e-13)


def disk_spectrum(m, bc, lambda_max, step=None, max_branches=100000):
    """Counting function of the unit disk up to ``lambda_max``.

    Scans ``k = 0, 1, ...`` until past :func:`angular_cutoff` and two
    consecutive branches are empty.  Free spectra include the three rigid
    motions at ``Lambda = 0``.
    """
    _check_bc(bc)
    if not lambda_max > 0:
        raise ValueError("lambda_max must be positive")
    if m.dim != 2:
        m = m.with_dim(2)
    kcut = angular_cutoff(m, bc, lambda_max)
    records = []
    if bc == "free":
        records.append((0.0, FREE_ZERO_MODES, "rigid"))
    # one backward recurrence yields the samples of every branch up to the cutoff
    x = _grid(m, lambda_max, step)
    a, b = _args(m, x)
    ta, tb = bessel_j_table(kcut + 1, a), bessel_j_table(kcut + 1, b)
    empty = 0
    suspects = []
    k = 0
    while True:
        if k > max_branches:
            raise ScanBudgetError(f"angular scan exceeded {max_branches} branches")
        samples = (x, a, b, ta, tb) if k < kcut else None
        scan = disk_branch_roots(m, bc, k, lambda_max, step, samples)
        mult = 1 if k == 0 else 2
        for r, mr, tag in zip(scan.roots, scan.multiplicity, scan.tags):
            records.append((float(r), mult * int(mr), f"k={k}"))
            if tag == "suspect":
                suspects.append((k, float(r)))
        empty = empty + 1 if len(scan) == 0 else 0
        if k >= kcut and empty >= 2:
            break
        k += 1
    params = {"lam": m.lam, "mu": m.mu}
    cf = CountingFunction("disk", bc, float(lambda_max), records, params)
    cf.suspects = suspects
    return cf
