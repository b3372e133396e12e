"""Truncated power series arithmetic on Taylor coefficient arrays.

A :class:`PowerSeries` of order ``k`` stores the coefficients of
``1, t, ..., t^k``.  Products, quotients and square roots are truncated to
the same order, so coefficient ``j`` of every result is exact in exact
arithmetic.
"""

from dataclasses import dataclass

import numpy as np


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class PowerSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise SeriesError("coefficients must be a non-empty 1-D array")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_poly(cls, poly, order):
        """Series of a polynomial given by ascending coefficients, truncated to ``order``."""
        c = np.zeros(order + 1)
        p = np.asarray(poly, dtype=float)[: order + 1]
        c[: p.size] = p
        return cls(c)

    @classmethod
    def constant(cls, value, order):
        return cls.from_poly([value], order)

    @property
    def order(self):
        return self.coeffs.size - 1

    def __getitem__(self, j):
        return float(self.coeffs[j])

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise SeriesError("series orders differ")
            return other
        return PowerSeries.constant(float(other), self.order)

    def __add__(self, other):
        return PowerSeries(self.coeffs + self._coerce(other).coeffs)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return ps_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ps_div(self, self._coerce(other))

    def __rtruediv__(self, other):
        return ps_div(self._coerce(other), self)


def ps_mul(a, b):
    if a.order != b.order:
        raise SeriesError("series orders differ")
    n = a.order + 1
    return PowerSeries(np.convolve(a.coeffs, b.coeffs)[:n])


def ps_div(a, b):
    """Quotient ``a / b``; ``b`` needs a nonzero constant term."""
    if a.order != b.order:
        raise SeriesError("series orders differ")
    b0 = b.coeffs[0]
    if b0 == 0.0:
        raise SeriesError("division by a series with zero constant term")
    n = a.order + 1
    q = np.zeros(n)
    for j in range(n):
        q[j] = (a.coeffs[j] - np.dot(q[:j], b.coeffs[j:0:-1])) / b0
    return PowerSeries(q)


def ps_sqrt(a):
    """Square root with positive constant term; ``a[0]`` must be positive."""
    a0 = a.coeffs[0]
    if a0 <= 0.0:
        raise SeriesError("square root needs a positive constant term")
    n = a.order + 1
    s = np.zeros(n)
    s[0] = np.sqrt(a0)
    for j in range(1, n):
        # sum_{i=0..j} s_i s_{j-i} = a_j
        cross = np.dot(s[1:j], s[j - 1 : 0 : -1])
        s[j] = (a.coeffs[j] - cross) / (2.0 * s[0])
    return PowerSeries(s)


def ps_compose_linear(a, b):
    """Composition ``a(b(t))`` where ``b`` is linear with zero constant term.

    Only ``b = c t`` is supported, which rescales coefficient ``j`` by ``c^j``.
    """
    if a.order != b.order:
        raise SeriesError("series orders differ")
    if b.coeffs[0] != 0.0 or np.any(b.coeffs[2:] != 0.0):
        raise SeriesError("inner series must be c*t")
    c = b.coeffs[1] if b.order >= 1 else 0.0
    return PowerSeries(a.coeffs * c ** np.arange(a.order + 1))


def variable(order):
    """The series ``t`` itself."""
    return PowerSeries.from_poly([0.0, 1.0], order)
