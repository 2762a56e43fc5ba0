"""Parabolic rotational and spherical charts of n-dimensional Euclidean space.

Angles are confined to the open quadrant (0, pi/2): the inverse-square
barriers keep every wavefunction inside x^(i) > 0 for the barrier axes.

Parabolic chart (n >= 3), angles theta^(1..n-2)::

    x^(1)   = xi eta cos th1 ... cos th(n-2)
    x^(j)   = xi eta cos th1 ... cos th(n-1-j) sin th(n-j)     (2 <= j <= n-1)
    x^(n)   = (xi^2 - eta^2) / 2

Spherical chart, angles theta^(1..n-1)::

    x^(1)   = r cos th1
    x^(k)   = r sin th1 ... sin th(k-1) cos thk                (2 <= k <= n-1)
    x^(n)   = r sin th1 ... sin th(n-1)

The array helpers (``*_array``) work on stacks of points along the leading
axis; the dataclass front ends wrap them for single points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, SingularPointError

HALF_PI = 0.5 * math.pi


def check_dimension(n: int) -> int:
    if int(n) != n or n < 3:
        raise DomainError(f"dimension n must be an integer >= 3, got {n!r}")
    return int(n)


def _check_angles(theta, count):
    theta = np.asarray(theta, dtype=float)
    if theta.shape[-1] != count:
        raise DomainError(f"expected {count} angles, got {theta.shape[-1]}")
    if np.any(theta <= 0.0) or np.any(theta >= HALF_PI):
        raise DomainError("every angle must lie strictly inside (0, pi/2)")
    return theta


@dataclass(frozen=True)
class CartesianPoint:
    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(float(v) for v in self.x))
        check_dimension(len(self.x))

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def r(self) -> float:
        return math.hypot(*self.x)


@dataclass(frozen=True)
class ParabolicPoint:
    xi: float
    eta: float
    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(float(t) for t in self.theta))
        if not (self.xi >= 0 and self.eta >= 0):
            raise DomainError(f"xi and eta must be non-negative, got {self.xi!r}, {self.eta!r}")
        _check_angles(self.theta, len(self.theta))

    @property
    def n(self) -> int:
        return len(self.theta) + 2


@dataclass(frozen=True)
class SphericalPoint:
    r: float
    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(float(t) for t in self.theta))
        if not self.r >= 0:
            raise DomainError(f"r must be non-negative, got {self.r!r}")
        _check_angles(self.theta, len(self.theta))

    @property
    def n(self) -> int:
        return len(self.theta) + 1


@dataclass(frozen=True)
class MetricData:
    """Diagonal metric g_aa of a chart and the volume density sqrt(det g)."""

    diagonal: tuple
    volume_density: float


# -- array kernels ----------------------------------------------------------


def parabolic_to_cartesian_array(xi, eta, theta):
    """Map parabolic coordinates to Cartesian.

    ``xi``, ``eta`` have shape (m,), ``theta`` shape (m, n-2); returns (m, n).
    """
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    m, k = theta.shape
    n = k + 2
    out = np.empty((m, n))
    rho = xi * eta
    c = np.cos(theta)
    s = np.sin(theta)
    # x^(j) for j = n-1 down to 2 uses the running cosine product
    run = rho.copy()
    for i in range(k):  # theta^(i+1)
        out[:, n - 2 - i] = run * s[:, i]
        run = run * c[:, i]
    out[:, 0] = run
    out[:, n - 1] = 0.5 * (xi * xi - eta * eta)
    return out


def _transverse_angles(xt):
    # xt = (x^(1) .. x^(m)); returns the m-1 angles of the nested cos/sin chart
    # x^(m) = rho sin th1, x^(m-1) = rho cos th1 sin th2, ..., x^(1) = rho prod cos
    m = xt.shape[1]
    cum = np.sqrt(np.cumsum(xt * xt, axis=1))  # cum[:, j] = |x^(1..j+1)|
    angles = np.empty((xt.shape[0], m - 1))
    for i in range(m - 1):
        j = m - 1 - i  # column of x^(m-i)
        angles[:, i] = np.arctan2(xt[:, j], cum[:, j - 1])
    return angles


def cartesian_to_parabolic_array(x):
    """Inverse of :func:`parabolic_to_cartesian_array`; returns (xi, eta, theta)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    n = x.shape[1]
    check_dimension(n)
    xt = x[:, : n - 1]
    if np.any(xt <= 0.0):
        raise SingularPointError(
            "parabolic inverse needs x^(i) > 0 for i < n (point on or outside a coordinate hyperplane)"
        )
    rho = np.sqrt(np.sum(xt * xt, axis=1))
    z = x[:, n - 1]
    r = np.hypot(rho, z)
    # avoid cancellation in r -/+ z: xi^2 eta^2 = rho^2
    big = np.sqrt(r + np.abs(z))
    small = rho / big
    xi = np.where(z >= 0, big, small)
    eta = np.where(z >= 0, small, big)
    return xi, eta, _transverse_angles(xt)


def spherical_to_cartesian_array(r, theta):
    """Map spherical coordinates (r: (m,), theta: (m, n-1)) to Cartesian (m, n)."""
    r = np.asarray(r, dtype=float)
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    m, k = theta.shape
    n = k + 1
    out = np.empty((m, n))
    run = r.copy()
    for i in range(k):
        out[:, i] = run * np.cos(theta[:, i])
        run = run * np.sin(theta[:, i])
    out[:, n - 1] = run
    return out


def cartesian_to_spherical_array(x):
    """Inverse of :func:`spherical_to_cartesian_array`; returns (r, theta)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    n = x.shape[1]
    check_dimension(n)
    if np.any(x <= 0.0):
        raise SingularPointError("spherical inverse needs every x^(i) > 0 (in-quadrant point)")
    # tail[:, k] = |x^(k+1) .. x^(n)|
    tail = np.sqrt(np.cumsum((x * x)[:, ::-1], axis=1))[:, ::-1]
    theta = np.arctan2(tail[:, 1:], x[:, : n - 1])
    return tail[:, 0], theta


def metric_parabolic_array(xi, eta, theta):
    """Diagonal metric (m, n) and sqrt(g) (m,) in parabolic coordinates."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    m, k = theta.shape
    n = k + 2
    s2 = xi * xi + eta * eta
    p2 = (xi * eta) ** 2
    diag = np.empty((m, n))
    diag[:, 0] = s2
    diag[:, 1] = s2
    cos2 = np.cos(theta) ** 2
    run = p2.copy()
    for i in range(k):
        diag[:, 2 + i] = run
        run = run * cos2[:, i]
    expo = n - 2 - np.arange(1, k + 1)
    sqrt_g = s2 * (xi * eta) ** (n - 2) * np.prod(np.cos(theta) ** expo, axis=1)
    return diag, sqrt_g


def metric_spherical_array(r, theta):
    """Diagonal metric (m, n) and sqrt(g) (m,) in spherical coordinates."""
    r = np.asarray(r, dtype=float)
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    m, k = theta.shape
    n = k + 1
    diag = np.empty((m, n))
    diag[:, 0] = 1.0
    sin2 = np.sin(theta) ** 2
    run = r * r
    for i in range(k):
        diag[:, 1 + i] = run
        run = run * sin2[:, i]
    expo = n - 1 - np.arange(1, k + 1)
    sqrt_g = r ** (n - 1) * np.prod(np.sin(theta) ** expo, axis=1)
    return diag, sqrt_g


# -- single-point front ends -------------------------------------------------


def _match(point_n, n):
    if n is not None and point_n != n:
        raise DomainError(f"point has dimension {point_n}, expected {n}")


def parabolic_to_cartesian(p: ParabolicPoint, n: int | None = None) -> CartesianPoint:
    _match(p.n, n)
    x = parabolic_to_cartesian_array([p.xi], [p.eta], [p.theta])[0]
    return CartesianPoint(tuple(x))


def cartesian_to_parabolic(c: CartesianPoint) -> ParabolicPoint:
    xi, eta, theta = cartesian_to_parabolic_array([c.x])
    return ParabolicPoint(float(xi[0]), float(eta[0]), tuple(theta[0]))


def spherical_to_cartesian(p: SphericalPoint, n: int | None = None) -> CartesianPoint:
    _match(p.n, n)
    x = spherical_to_cartesian_array([p.r], [p.theta])[0]
    return CartesianPoint(tuple(x))


def cartesian_to_spherical(c: CartesianPoint) -> SphericalPoint:
    r, theta = cartesian_to_spherical_array([c.x])
    return SphericalPoint(float(r[0]), tuple(theta[0]))


def metric_parabolic(p: ParabolicPoint, n: int | None = None) -> MetricData:
    _match(p.n, n)
    diag, sg = metric_parabolic_array([p.xi], [p.eta], [p.theta])
    return MetricData(tuple(diag[0]), float(sg[0]))


def metric_spherical(p: SphericalPoint, n: int | None = None) -> MetricData:
    _match(p.n, n)
    diag, sg = metric_spherical_array([p.r], [p.theta])
    return MetricData(tuple(diag[0]), float(sg[0]))


def as_cartesian_array(points: Sequence) -> np.ndarray:
    """Stack CartesianPoints (or raw coordinate sequences) into an (m, n) array."""
    rows = [p.x if isinstance(p, CartesianPoint) else tuple(p) for p in points]
    return np.asarray(rows, dtype=float)
