"""Elastic eigenvalues of the flat cylinder ``T^2 x [0, h]``, ``T^2 = (R / 2 pi Z)^2``.

Horizontal Fourier modes ``e^{i(k1 x + k2 y)}`` separate the problem; it
depends only on ``K = k1^2 + k2^2``, and each root at ``K`` has multiplicity
``Sigma_2(K)``.  At fixed ``K > 0`` the displacement splits into a
horizontally polarised shear (SH) part with closed form eigenvalues
``mu (K + (m pi / h)^2)`` and an in-plane (Lamb) part.  The Lamb part
splits further into modes symmetric and antisymmetric about the midplane.
"""

import math

import numpy as np
from scipy.linalg import expm

from ..numerics.roots import scan_sampled
from ..rayleigh import rayleigh_w1
from ..shift import _check_bc
from .counting import CountingFunction

FREE_ZERO_MODES = 3  # rigid translations


def sum_two_squares(K):
    """Number of ``(k1, k2)`` in ``Z^2`` with ``k1^2 + k2^2 = K``."""
    if K < 0 or int(K) != K:
        raise ValueError("K must be a non-negative integer")
    K = int(K)
    count = 0
    r = math.isqrt(K)
    for k1 in range(-r, r + 1):
        rest = K - k1 * k1
        s = math.isqrt(rest)
        if s * s == rest:
            count += 1 if s == 0 else 2
    return count


def _cs(P, H):
    """Scaled ``(C, S)`` of ``cos(p H)`` and ``sin(p H) / p`` with ``p^2 = P``.

    For ``P < 0`` both are divided by ``cosh(kappa H)``.  The Lamb
    determinants are bilinear in the two families, so this rescales them by
    a positive factor.
    """
    P = np.asarray(P, dtype=float)
    C = np.empty_like(P)
    S = np.empty_like(P)
    pos = P > 0
    neg = P < 0
    zero = ~(pos | neg)
    p = np.sqrt(P[pos])
    C[pos] = np.cos(p * H)
    S[pos] = np.sin(p * H) / p
    kap = np.sqrt(-P[neg])
    C[neg] = 1.0
    S[neg] = np.tanh(kap * H) / kap
    C[zero] = 1.0
    S[zero] = H
    return C, S


def lamb_determinants(m, bc, K, h, Lambda):
    """``(symmetric, antisymmetric)`` Lamb determinants at wavenumber ``sqrt(K)``.

    With ``omega1 = Lambda/(lambda+2mu)``, ``omega2 = Lambda/mu``,
    ``P_j = omega_j - K`` and the half thickness ``H = h/2``::

        free  sym   -(2K - omega2)^2 C1 S2 - 4 K P1 S1 C2
        free  anti  -(2K - omega2)^2 S1 C2 - 4 K P2 S2 C1
        dir   sym   -K C1 S2 - P1 S1 C2
        dir   anti  -K S1 C2 - P2 S2 C1
    """
    _check_bc(bc)
    lam = np.asarray(Lambda, dtype=float)
    w1 = lam / m.p_modulus
    w2 = lam / m.mu
    P1, P2 = w1 - K, w2 - K
    H = 0.5 * h
    C1, S1 = _cs(P1, H)
    C2, S2 = _cs(P2, H)
    if bc == "free":
        g = (2.0 * K - w2) ** 2
        sym = -g * C1 * S2 - 4.0 * K * P1 * S1 * C2
        anti = -g * S1 * C2 - 4.0 * K * P2 * S2 * C1
    else:
        sym = -K * C1 * S2 - P1 * S1 * C2
        anti = -K * S1 * C2 - P2 * S2 * C1
    return sym, anti


def sh_determinant(m, bc, K, h, Lambda):
    """SH secular function: ``sin(s h)/s`` (Dirichlet) or ``s sin(s h)`` (free), ``s^2 = Lambda/mu - K``."""
    _check_bc(bc)
    P = np.asarray(Lambda, dtype=float) / m.mu - K
    s = np.sqrt(np.abs(P))
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(P > 0, np.sin(s * h) / np.where(s > 0, s, 1.0),
                         np.sinh(s * h) / np.where(s > 0, s, 1.0))
    ratio = np.where(s == 0, h, ratio)
    if bc == "dir":
        return ratio
    return P * ratio


def cylinder_secular(m, bc, K, h, Lambda):
    """``(SH value, Lamb value)`` at ``(K, Lambda)``; the Lamb value is ``sym * anti``."""
    if not h > 0:
        raise ValueError("h must be positive")
    sym, anti = lamb_determinants(m, bc, K, h, Lambda)
    return sh_determinant(m, bc, K, h, Lambda), sym * anti


def sh_eigenvalues(m, bc, K, h, lambda_max):
    """Closed form SH eigenvalues ``mu (K + (m pi / h)^2)`` up to ``lambda_max``."""
    start = 1 if bc == "dir" else 0
    out = []
    j = start
    while True:
        v = m.mu * (K + (j * math.pi / h) ** 2)
        if v > lambda_max:
            break
        if v > 0:
            out.append(v)
        j += 1
    return out


def full_determinant(m, bc, k1, k2, h, Lambda):
    """Boundary determinant of the full three-component problem.

    Integrates the first order system for displacement and normal traction
    across the slab with a matrix exponential, without separating SH and
    Lamb parts.  Intended as an independent check for moderate ``K`` and
    ``Lambda``; it loses accuracy when evanescent growth ``e^{sqrt(K) h}``
    becomes large.
    """
    lam_, mu = m.lam, m.mu
    pm = m.p_modulus
    k = np.array([k1, k2], dtype=float)
    K = float(k @ k)
    out = []
    for L in np.atleast_1d(np.asarray(Lambda, dtype=float)):
        A = np.zeros((6, 6))
        # state (V1, V2, U3, t1, t2, t3) with horizontal displacement i V
        # V_j' = t_j / mu - k_j U3
        for j in range(2):
            A[j, 3 + j] = 1.0 / mu
            A[j, 2] = -k[j]
        # U3' = (t3 + lam k.V) / (lam + 2 mu)
        u3 = np.zeros(6)
        u3[5] = 1.0 / pm
        u3[0:2] = lam_ * k / pm
        A[2] = u3
        # t_j' = (mu K - L) V_j + (lam + mu) k_j k.V - lam k_j U3'
        for j in range(2):
            row = np.zeros(6)
            row[j] += mu * K - L
            row[0:2] += (lam_ + mu) * k[j] * k
            row -= lam_ * k[j] * u3
            A[3 + j] = row
        # t3' = (mu K - L) U3 + mu k.V'
        row = np.zeros(6)
        row[2] = mu * K - L
        for j in range(2):
            row += mu * k[j] * A[j]
        A[5] = row
        E = expm(A * h)
        block = E[0:3, 3:6] if bc == "dir" else E[3:6, 0:3]
        out.append(np.linalg.det(block))
    out = np.array(out)
    return out if np.ndim(Lambda) else float(out[0])


def default_step(m, h):
    """Grid step ``mu (pi / h)^2 / 64``, a fraction of the SH mode spacing at the bottom of each branch."""
    return m.mu * (math.pi / h) ** 2 / 64.0


def wavenumber_cutoff(m, bc, lambda_max):
    """Largest ``K`` with an eigenvalue below ``lambda_max``.

    Dirichlet eigenvalues at ``K`` exceed ``mu K``.  Free plates carry a
    flexural mode just below the surface wave line ``mu gamma_R^2 K``, so
    the bound uses that line with a margin.
    """
    if bc == "dir":
        return int(math.floor(lambda_max / m.mu))
    return int(math.ceil(1.05 * lambda_max / (m.mu * rayleigh_w1(m.alpha)))) + 2


def lamb_branch_roots(m, bc, K, h, lambda_max, step=None):
    """Roots of the symmetric and antisymmetric Lamb determinants for one ``K > 0``."""
    step = default_step(m, h) if step is None else step
    lo = 0.5 * step
    n = max(2, int(math.ceil((lambda_max - lo) / step)) + 1)
    x = np.linspace(lo, lambda_max, n)
    sym_x, anti_x = lamb_determinants(m, bc, K, h, x)
    out = {}
    for name, vals, idx in (("sym", sym_x, 0), ("anti", anti_x, 1)):
        f = lambda L, i=idx: lamb_determinants(m, bc, K, h, L)[i]
        out[name] = scan_sampled(f, x, vals, xtol=1e-13)
    return out


def cylinder_spectrum(m, bc, h, lambda_max, step=None):
    """Counting function of ``T^2 x [0, h]`` up to ``lambda_max``."""
    _check_bc(bc)
    if not h > 0:
        raise ValueError("h must be positive")
    if not lambda_max > 0:
        raise ValueError("lambda_max must be positive")
    if m.dim != 3:
        m = m.with_dim(3)
    records = []
    # K = 0: shear modes of multiplicity 2 and a compressional mode
    j = 1
    while m.mu * (j * math.pi / h) ** 2 <= lambda_max:
        records.append((m.mu * (j * math.pi / h) ** 2, 2, "K=0:shear"))
        j += 1
    j = 1
    while m.p_modulus * (j * math.pi / h) ** 2 <= lambda_max:
        records.append((m.p_modulus * (j * math.pi / h) ** 2, 1, "K=0:press"))
        j += 1
    if bc == "free":
        records.append((0.0, FREE_ZERO_MODES, "rigid"))
    suspects = []
    for K in range(1, wavenumber_cutoff(m, bc, lambda_max) + 1):
        mult = sum_two_squares(K)
        if mult == 0:
            continue
        for v in sh_eigenvalues(m, bc, K, h, lambda_max):
            records.append((v, mult, f"K={K}:sh"))
        for name, scan in lamb_branch_roots(m, bc, K, h, lambda_max, step).items():
            for r, mr, tag in zip(scan.roots, scan.multiplicity, scan.tags):
                records.append((float(r), mult * int(mr), f"K={K}:{name}"))
                if tag == "suspect":
                    suspects.append((K, name, float(r)))
    params = {"lam": m.lam, "mu": m.mu, "h": h}
    cf = CountingFunction("cylinder", bc, float(lambda_max), records, params)
    cf.suspects = suspects
    return cf
