"""Spectral shift functions of the elastic half-space.

For a boundary covector of length ``xi`` and spectral parameter ``Lambda``
the shift function is piecewise: constant below the lowest threshold and
above ``(lambda + 2 mu) xi^2``, with an arctan profile in between.  By
homogeneity everything reduces to ``xi = 1``.

The shift splits into a part from the ``d - 2`` polarisations orthogonal
to the plane spanned by the normal and ``xi`` (``perp``) and the in-plane
part (``plane``).  Each part equals ``phi / (2 pi) + N`` where ``phi`` is the
phase of the scattering matrix determinant, normalised at the thresholds by
the rigid/soft jump rule, and ``N`` counts bound states.
"""

import math
from dataclasses import dataclass

import numpy as np

from .numerics.quadrature import quad
from .rayleigh import rayleigh_w1
from .weyl import DEFAULT_TOL, _unit_sphere_area

BC_VALUES = ("dir", "free")


def _check_bc(bc):
    if bc not in BC_VALUES:
        raise ValueError(f"bc must be 'dir' or 'free', got {bc!r}")


def rayleigh_eigenvalue(m):
    """Bound state ``Lambda_R = mu gamma_R^2`` of the free in-plane problem at ``xi = 1``."""
    return m.mu * rayleigh_w1(m.alpha)


def _radicand(m, x):
    # (1 - x/(lambda+2mu)) (x/mu - 1), positive strictly between the thresholds
    return (1.0 - x / m.p_modulus) * (x / m.mu - 1.0)


def _dir_arctan(m, x):
    return math.atan(math.sqrt(max(_radicand(m, x), 0.0)))


def _free_arctan(m, x):
    return math.atan2((x / m.mu - 2.0) ** 2, 4.0 * math.sqrt(max(_radicand(m, x), 0.0)))


def _normalise(xi_norm, lam_value):
    if not xi_norm > 0:
        raise ValueError(f"xi_norm must be positive, got {xi_norm}")
    return lam_value / (xi_norm * xi_norm)


def shift_dir(m, xi_norm, Lambda, return_flag=False):
    """Dirichlet spectral shift function.

    At a breakpoint the limit from above is returned; with
    ``return_flag=True`` the result is ``(value, at_breakpoint)``.
    """
    x = _normalise(xi_norm, Lambda)
    d = m.dim
    flag = x == m.mu or x == m.p_modulus
    if x < m.mu:
        v = 0.0
    elif x < m.p_modulus:
        v = -(d - 1) / 4.0 - _dir_arctan(m, x) / math.pi
    else:
        v = -d / 4.0
    return (v, flag) if return_flag else v


def shift_free(m, xi_norm, Lambda, return_flag=False):
    """Free boundary spectral shift function; conventions as :func:`shift_dir`."""
    x = _normalise(xi_norm, Lambda)
    d = m.dim
    lr = rayleigh_eigenvalue(m)
    flag = x == lr or x == m.mu or x == m.p_modulus
    if x < lr:
        v = 0.0
    elif x < m.mu:
        v = 1.0
    elif x < m.p_modulus:
        v = (d - 1) / 4.0 + _free_arctan(m, x) / math.pi
    else:
        v = d / 4.0
    return (v, flag) if return_flag else v


def shift(m, bc, xi_norm, Lambda, return_flag=False):
    _check_bc(bc)
    f = shift_dir if bc == "dir" else shift_free
    return f(m, xi_norm, Lambda, return_flag)


@dataclass(frozen=True)
class ShiftProfile:
    """Shift function of a fixed material and boundary condition at a fixed ``xi``."""

    material: object
    bc: str
    xi_norm: float
    breakpoints: tuple

    def __call__(self, Lambda):
        return shift(self.material, self.bc, self.xi_norm, Lambda)

    def evaluate(self, Lambda):
        """``(value, at_breakpoint)``."""
        return shift(self.material, self.bc, self.xi_norm, Lambda, return_flag=True)

    def sample(self, grid):
        return np.array([self(v) for v in grid])


def shift_profile(m, bc, xi_norm=1.0):
    _check_bc(bc)
    s = xi_norm * xi_norm
    bps = [m.mu * s, m.p_modulus * s]
    if bc == "free":
        bps.insert(0, rayleigh_eigenvalue(m) * s)
    return ShiftProfile(m, bc, float(xi_norm), tuple(bps))


# --- components ------------------------------------------------------------


def shift_components(m, bc, Lambda):
    """``(perp, plane)`` parts of the shift function at ``xi = 1``."""
    _check_bc(bc)
    d, x = m.dim, Lambda
    sign = -1.0 if bc == "dir" else 1.0
    perp = sign * (d - 2) / 4.0 if x >= m.mu else 0.0
    if bc == "dir":
        if x < m.mu:
            plane = 0.0
        elif x < m.p_modulus:
            plane = -_dir_arctan(m, x) / math.pi - 0.25
        else:
            plane = -0.5
    else:
        if x < rayleigh_eigenvalue(m):
            plane = 0.0
        elif x < m.mu:
            plane = 1.0
        elif x < m.p_modulus:
            plane = _free_arctan(m, x) / math.pi + 0.25
        else:
            plane = 0.5
    return perp, plane


# --- scattering data ---------------------------------------------------------


@dataclass(frozen=True)
class ScatteringData:
    """Thresholds of one invariant subproblem at ``xi = 1``.

    ``multiplicity[l]`` is the multiplicity of the symbol eigenvalue that
    degenerates at ``thresholds[l]``; ``j_star[l]`` counts the bounded
    oscillating solutions there.  A threshold is rigid when ``j_star`` is 0
    and soft when it equals the multiplicity.
    """

    component: str
    bc: str
    thresholds: tuple
    multiplicity: tuple
    j_star: tuple
    channels: tuple

    @property
    def kinds(self):
        out = []
        for j, mk in zip(self.j_star, self.multiplicity):
            out.append("rigid" if j == 0 else "soft" if j == mk else "mixed")
        return tuple(out)


def scattering_data(m, bc, component="plane"):
    _check_bc(bc)
    if component == "perp":
        n = m.dim - 2
        j = 0 if bc == "dir" else n
        return ScatteringData("perp", bc, (m.mu,), (n,), (j,), (n,))
    if component != "plane":
        raise ValueError(f"component must be 'plane' or 'perp', got {component!r}")
    j2 = 1 if (bc == "free" and m.lam == 0.0) else 0
    return ScatteringData("plane", bc, (m.mu, m.p_modulus), (1, 1), (0, j2), (1, 2))


def _argdet_branch(m, bc, component, l, x):
    """``arg det S`` on interval ``l``, continued to its closed endpoints."""
    if component == "perp":
        return math.pi if (bc == "dir" and m.dim % 2 == 1) else 0.0
    if l == 1:
        return 0.0
    if bc == "dir":
        return -2.0 * _dir_arctan(m, x)
    return 2.0 * _free_arctan(m, x)


def scattering_phase(m, bc, Lambda, component="plane"):
    """``arg det S(Lambda)`` at ``xi = 1`` for ``Lambda`` in the continuous spectrum."""
    data = scattering_data(m, bc, component)
    if not Lambda > data.thresholds[0]:
        raise ValueError(
            f"Lambda={Lambda} is below the continuous spectrum (threshold {data.thresholds[0]})"
        )
    l = int(np.searchsorted(data.thresholds, Lambda, side="left")) - 1
    return _argdet_branch(m, bc, component, l, Lambda)


def gauge_constants(m, bc, component="plane"):
    """Constants added to ``arg det S`` on each interval so that the jumps obey the threshold rule."""
    data = scattering_data(m, bc, component)
    consts = []
    phi_below = 0.0
    for l, (t, mk, j) in enumerate(zip(data.thresholds, data.multiplicity, data.j_star)):
        jump = math.pi * (j - mk / 2.0)
        s = phi_below + jump - _argdet_branch(m, bc, component, l, t)
        consts.append(s)
        nxt = data.thresholds[l + 1] if l + 1 < len(data.thresholds) else None
        if nxt is not None:
            phi_below = _argdet_branch(m, bc, component, l, nxt) + s
    return tuple(consts)


def phase_shift(m, bc, Lambda, component="plane"):
    """Phase shift ``phi``: zero below the first threshold, ``arg det S + s_l`` on interval ``l``."""
    data = scattering_data(m, bc, component)
    if Lambda <= data.thresholds[0]:
        return 0.0
    l = int(np.searchsorted(data.thresholds, Lambda, side="left")) - 1
    return _argdet_branch(m, bc, component, l, Lambda) + gauge_constants(m, bc, component)[l]


def bound_state_count(m, bc, Lambda, component="plane"):
    """Number of eigenvalues of the subproblem below ``Lambda``."""
    if bc == "free" and component == "plane":
        return 1 if Lambda > rayleigh_eigenvalue(m) else 0
    return 0


def shift_from_scattering(m, bc, Lambda, component="plane"):
    """``phi / (2 pi) + N`` for one subproblem at ``xi = 1``."""
    return phase_shift(m, bc, Lambda, component) / (2.0 * math.pi) + bound_state_count(
        m, bc, Lambda, component
    )


# --- integration over the boundary phase space ----------------------------


def b_from_shift(m, bc, tol=DEFAULT_TOL):
    """Second Weyl coefficient from the shift function at ``Lambda = 1``.

    Integrates ``shift(r, 1) r^{d-2}`` over ``r > 0`` in polar coordinates
    on the boundary cotangent fibre.  Constant pieces are integrated exactly
    and the arctan piece by quadrature.
    """
    _check_bc(bc)
    d = m.dim
    rp = 1.0 / math.sqrt(m.p_modulus)
    rs = 1.0 / math.sqrt(m.mu)
    sign = -1.0 if bc == "dir" else 1.0

    def moment(a, b):
        return (b ** (d - 1) - a ** (d - 1)) / (d - 1)

    total = sign * d / 4.0 * moment(0.0, rp)
    total += sign * (d - 1) / 4.0 * moment(rp, rs)
    if bc == "free":
        rr = 1.0 / math.sqrt(rayleigh_eigenvalue(m))
        total += moment(rs, rr)

    # with x = 1/r^2 the radicand is (r - rp)(r + rp)(rs - r)(rs + r) / (r^4 rs^2 ... )
    def radicand(r, da, db):
        return da * (r + rp) * db * (rs + r) / (r ** 4 * m.mu * rs * rs)

    if bc == "dir":
        def f(r, da, db):
            return np.arctan(np.sqrt(radicand(r, da, db))) * r ** (d - 2)
    else:
        def f(r, da, db):
            num = (1.0 / (m.mu * r * r) - 2.0) ** 2
            return np.arctan2(num, 4.0 * np.sqrt(radicand(r, da, db))) * r ** (d - 2)

    split = 1.0 / math.sqrt(2.0 * m.mu)
    if bc == "free" and rp < split < rs:
        left = lambda r, da, db: f(r, da, rs - r)
        right = lambda r, da, db: f(r, r - rp, db)
        v1, _ = quad(left, rp, split, tol / 2, distances=True)
        v2, _ = quad(right, split, rs, tol / 2, distances=True)
        integral = v1 + v2
    else:
        integral, _ = quad(f, rp, rs, tol, distances=True)
    total += sign * integral / math.pi
    return _unit_sphere_area(d - 2) / (2.0 * math.pi) ** (d - 1) * total
