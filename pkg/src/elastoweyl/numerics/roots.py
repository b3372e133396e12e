"""Bracketed root scanning for real transcendental functions.

Roots are located from sign changes on a sampling grid and refined by
vectorised bisection.  Local minima of ``|f|`` without a sign change are
resampled: a hidden pair of close simple roots is resolved into two roots,
while a minimum that touches zero is reported as a double root tagged
``"suspect"``.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

_RESAMPLE = 33


@dataclass
class RootScan:
    """Result of :func:`scan_roots`.

    ``roots`` are sorted ascending; ``multiplicity`` is 1 for roots found
    through a sign change and 2 for tangential zeros, which also carry the
    tag ``"suspect"``.
    """

    interval: tuple
    step: float
    roots: np.ndarray
    multiplicity: np.ndarray
    tags: list = field(default_factory=list)
    resolution: float = 0.0

    @property
    def suspects(self):
        return self.roots[[t == "suspect" for t in self.tags]]

    def __len__(self):
        return len(self.roots)


def bisect_brackets(f, lo, hi, flo=None, xtol=1e-12, maxiter=200):
    """Refine all brackets ``[lo_i, hi_i]`` with a sign change simultaneously.

    ``f`` must accept arrays.  Iteration stops once every bracket is narrower
    than ``xtol * max(1, |x|)``.
    """
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    if lo.size == 0:
        return lo
    flo = np.asarray(f(lo), dtype=float) if flo is None else np.array(flo, dtype=float)
    slo = _sign(flo)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        active = (hi - lo) > xtol * np.maximum(1.0, np.abs(mid))
        if not active.any():
            break
        idx = np.flatnonzero(active)
        fm = np.asarray(f(mid[idx]), dtype=float)
        same = _sign(fm) == slo[idx]
        lo[idx[same]] = mid[idx[same]]
        hi[idx[~same]] = mid[idx[~same]]
    return 0.5 * (lo + hi)


def _sign(v):
    # zero counts as positive so that grid hits never break a bracket
    return np.where(v >= 0, 1.0, -1.0)


def _local_minima(absf, same_sign):
    inner = np.arange(1, absf.size - 1)
    cond = (absf[1:-1] <= absf[:-2]) & (absf[1:-1] <= absf[2:]) & same_sign
    return inner[cond]


# two roots closer than this (relative) cannot be told apart from a double root
_PAIR_RTOL = 1e-7


def _pair(r):
    """``(roots, multiplicities, tags)`` for a resolved pair of close roots."""
    r = np.sort(np.asarray(r, dtype=float))
    if r.size == 2 and r[1] - r[0] <= _PAIR_RTOL * max(1.0, abs(r[1])):
        return [0.5 * (r[0] + r[1])], [2], ["suspect"]
    return list(r), [1] * r.size, ["pair"] * r.size


def scan_sampled(f, x, fx, residual_tol=1e-8, xtol=1e-12):
    """Root scan given precomputed samples ``fx = f(x)`` on an ascending grid.

    ``residual_tol`` is relative: a local minimum of ``|f|`` counts as a
    tangential zero when it is below ``residual_tol`` times the larger of
    the two neighbouring samples.
    """
    x = np.asarray(x, dtype=float)
    fx = np.asarray(fx, dtype=float)
    if x.size < 2:
        return RootScan((x[0], x[0]) if x.size else (0.0, 0.0), 0.0,
                        np.empty(0), np.empty(0, dtype=int), [], xtol)
    step = float(np.max(np.diff(x)))
    sign = _sign(fx)
    roots, mult, tags = [], [], []

    change = np.flatnonzero(sign[:-1] * sign[1:] < 0)
    if change.size:
        r = bisect_brackets(f, x[change], x[change + 1], fx[change], xtol)
        roots.extend(r)
        mult.extend([1] * r.size)
        tags.extend(["simple"] * r.size)

    absf = np.abs(fx)
    same = (sign[:-2] == sign[1:-1]) & (sign[1:-1] == sign[2:])
    cand = _local_minima(absf, same)
    if cand.size:
        lo = x[cand - 1]
        hi = x[cand + 1]
        frac = np.linspace(0.0, 1.0, _RESAMPLE)
        pts = lo[:, None] + (hi - lo)[:, None] * frac[None, :]
        vals = np.asarray(f(pts.ravel()), dtype=float).reshape(pts.shape)
        for row, i in enumerate(cand):
            p, v = pts[row], vals[row]
            s = sign[i]
            sv = _sign(v)
            flips = np.flatnonzero(sv[:-1] * sv[1:] < 0)
            if flips.size:
                r, k, t = _pair(bisect_brackets(f, p[flips], p[flips + 1], v[flips], xtol))
                roots.extend(r)
                mult.extend(k)
                tags.extend(t)
                continue
            scale = max(absf[i - 1], absf[i + 1])
            j = int(np.argmin(s * v))
            if s * v[j] > 1e-2 * scale:
                continue
            a = p[max(j - 1, 0)]
            b = p[min(j + 1, p.size - 1)]
            res = minimize_scalar(
                lambda t: s * float(np.asarray(f(np.array([t])))[0]),
                bounds=(a, b),
                method="bounded",
                options={"xatol": xtol * max(1.0, abs(p[j]))},
            )
            fmin = s * res.fun
            if fmin < 0.0:
                # the minimiser crossed zero: two close simple roots
                fa = float(np.asarray(f(np.array([a])))[0])
                r, k, t = _pair(bisect_brackets(f, [a, res.x], [res.x, b], [fa, s * fmin], xtol))
                roots.extend(r)
                mult.extend(k)
                tags.extend(t)
                continue
            if fmin <= residual_tol * scale:
                roots.append(res.x)
                mult.append(2)
                tags.append("suspect")

    if not roots:
        return RootScan((x[0], x[-1]), step, np.empty(0), np.empty(0, dtype=int), [], xtol)
    order = np.argsort(roots)
    roots = np.asarray(roots)[order]
    mult = np.asarray(mult, dtype=int)[order]
    tags = [tags[k] for k in order]
    keep = np.ones(roots.size, dtype=bool)
    for k in range(1, roots.size):
        if roots[k] - roots[k - 1] <= 10 * xtol * max(1.0, abs(roots[k])):
            keep[k] = False
    return RootScan(
        (x[0], x[-1]), step, roots[keep], mult[keep],
        [t for t, k in zip(tags, keep) if k], 10 * xtol,
    )


def scan_roots(f, a, b, step, residual_tol=1e-8, xtol=1e-12):
    """Find the roots of a vectorised ``f`` on ``[a, b]``.

    Parameters
    ----------
    f : callable
        Accepts and returns arrays.
    a, b : float
        Scan interval, ``a < b``.
    step : float
        Grid spacing; roots closer than about ``2 * step`` may only be
        found through the local-minimum resampling.
    residual_tol : float
        Relative threshold for reporting tangential zeros.
    xtol : float
        Relative bisection tolerance in the argument.
    """
    if not a < b:
        raise ValueError("need a < b")
    if step <= 0:
        raise ValueError("step must be positive")
    n = max(2, int(np.ceil((b - a) / step)) + 1)
    x = np.linspace(a, b, n)
    fx = np.asarray(f(x), dtype=float)
    return scan_sampled(f, x, fx, residual_tol, xtol)
