"""Lamé parameters of a homogeneous isotropic elastic medium."""

import math
from dataclasses import dataclass


class MaterialError(ValueError):
    pass


@dataclass(frozen=True)
class Material:
    """Validated Lamé coefficients in dimension ``dim``.

    Use :func:`new_material` rather than the constructor so that the
    admissibility checks run.
    """

    lam: float
    mu: float
    dim: int
    extended: bool = False

    @property
    def alpha(self):
        """``mu / (lambda + 2 mu)``, the squared ratio of shear to pressure wave speed."""
        return self.mu / (self.lam + 2.0 * self.mu)

    @property
    def p_modulus(self):
        return self.lam + 2.0 * self.mu

    @property
    def alpha_upper_bound(self):
        # admissible range of alpha under mu > 0, d*lambda + 2*mu > 0
        return self.dim / (2.0 * (self.dim - 1))

    def with_dim(self, dim):
        return new_material(self.lam, self.mu, dim, self.extended)

    def scaled(self, kappa):
        return new_material(kappa * self.lam, kappa * self.mu, self.dim, self.extended)


def new_material(lam, mu, dim, extended=False):
    """Build a :class:`Material`.

    In standard mode the coefficients must satisfy ``mu > 0`` and
    ``dim*lam + 2*mu > 0``.  Extended mode only asks for ``mu > 0`` and
    ``alpha`` in ``(0, 1)``, i.e. ``lam + mu > 0``.
    """
    lam = float(lam)
    mu = float(mu)
    if int(dim) != dim or dim < 2:
        raise MaterialError(f"dimension must be an integer >= 2, got {dim}")
    dim = int(dim)
    if not (math.isfinite(lam) and math.isfinite(mu)):
        raise MaterialError("Lamé coefficients must be finite")
    if mu <= 0:
        raise MaterialError(f"mu must be positive, got {mu}")
    if extended:
        if not lam + mu > 0:
            raise MaterialError(f"extended mode needs lambda + mu > 0 (alpha in (0,1)), got lambda={lam}")
    elif not dim * lam + 2.0 * mu > 0:
        raise MaterialError(f"need d*lambda + 2*mu > 0, got {dim * lam + 2.0 * mu}")
    return Material(lam, mu, dim, bool(extended))


def material_from_alpha(alpha, mu=1.0, dim=3):
    """Material with the given ``alpha``; uses extended mode when ``alpha`` needs it."""
    if not 0.0 < alpha < 1.0:
        raise MaterialError(f"alpha must lie in (0, 1), got {alpha}")
    lam = mu / alpha - 2.0 * mu
    extended = not dim * lam + 2.0 * mu > 0
    return new_material(lam, mu, dim, extended)


def wave_speeds(m):
    """Longitudinal and transverse wave speeds ``(sqrt(lambda+2mu), sqrt(mu))``."""
    return math.sqrt(m.p_modulus), math.sqrt(m.mu)
