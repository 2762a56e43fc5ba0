"""Closed-form bound states and the radial Coulomb Green's function.

Every wavefunction is a product of one-dimensional factors:

* angular factors, each a Poschl-Teller eigenfunction on (0, pi/2)
  divided by the square root of its slice of the volume density;
* a radial block: (xi, eta) oscillator functions in the parabolic chart,
  a Coulomb-Laguerre function of r in the spherical chart.

All normalisation constants are assembled as logarithms and exponentiated
once, so quantum numbers in the hundreds do not overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from . import coords
from .errors import DomainError, PoleError, SingularPointError
from .model import ModelParams
from .quantum import (
    ParabolicState,
    SphericalState,
    State,
    energy,
    m_chain_parabolic,
    m_chain_spherical,
    principal_number,
    sigma,
    validate_state,
)
from .specfun import jacobi_poly, laguerre_poly, rgamma, whittaker_m, whittaker_w

# Relative distance in E below which green_radial refuses to evaluate.
POLE_GUARD = 1e-9


@dataclass(frozen=True)
class PTIndex:
    """Labels of a Poschl-Teller eigenfunction on (0, pi/2).

    ``lam`` goes with sin(theta), ``kappa_pt`` with cos(theta).  Index
    values down to -1/2 are allowed: -1/2 is the even sector of a free
    (barrier-less) angle.
    """

    lam: float
    kappa_pt: float
    J: int

    def __post_init__(self):
        if not (self.lam >= -0.5 and self.kappa_pt >= -0.5):
            raise DomainError(f"PT indices must be >= -1/2, got {self.lam!r}, {self.kappa_pt!r}")
        if int(self.J) != self.J or self.J < 0:
            raise DomainError(f"J must be a non-negative integer, got {self.J!r}")
        object.__setattr__(self, "J", int(self.J))

    @property
    def eigen_index(self) -> float:
        """kappa + lambda + 2J + 1; the PT energy is hbar^2/2M times its square."""
        return self.kappa_pt + self.lam + 2 * self.J + 1.0


def pt_log_norm(idx: PTIndex) -> float:
    lam, kap, J = idx.lam, idx.kappa_pt, idx.J
    if J == 0:
        # (k+l+1) Gamma(k+l+1) = Gamma(k+l+2), finite at k = l = -1/2
        head = math.lgamma(kap + lam + 2.0)
    else:
        head = math.log(kap + lam + 2 * J + 1.0) + math.lgamma(kap + lam + J + 1.0)
    return 0.5 * (
        math.log(2.0) + head + math.lgamma(J + 1.0) - math.lgamma(kap + J + 1.0) - math.lgamma(lam + J + 1.0)
    )


def _check_open_angles(theta):
    theta = np.asarray(theta, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= coords.HALF_PI):
        raise DomainError("angles must lie strictly inside (0, pi/2)")
    return theta


def pt_wavefunction(idx: PTIndex, theta):
    """Normalised Poschl-Teller eigenfunction, unit norm in d(theta) on (0, pi/2)."""
    theta = _check_open_angles(theta)
    s, c = np.sin(theta), np.cos(theta)
    val = np.exp(pt_log_norm(idx) + (idx.lam + 0.5) * np.log(s) + (idx.kappa_pt + 0.5) * np.log(c))
    val = val * jacobi_poly(idx.J, idx.lam, idx.kappa_pt, np.cos(2.0 * theta))
    return val if np.ndim(val) else float(val)


@dataclass(frozen=True)
class AngularFactor:
    """One angular factor f(theta) = PT(theta) / sqrt(sin^ws cos^wc).

    ``angle_index`` is the 0-based position of theta^(k) in the chart's angle
    list; (weight_sin, weight_cos) are the exponents of this angle's slice of
    the volume density, so that f has unit norm in that weight.
    """

    angle_index: int
    pt: PTIndex
    weight_sin: float
    weight_cos: float

    def __call__(self, theta):
        theta = _check_open_angles(theta)
        w = self.weight_sin * np.log(np.sin(theta)) + self.weight_cos * np.log(np.cos(theta))
        return pt_wavefunction(self.pt, theta) * np.exp(-0.5 * w)


def parabolic_angular_factors(params: ModelParams, s: ParabolicState) -> list:
    """Factors l = 1..n-2; factor l lives on theta^(n-l-1) with weight cos^(l-1)."""
    validate_state(params, s)
    n, p = params.n, params.p
    m = m_chain_parabolic(params, s)
    out = []
    for l in range(1, n - 1):
        pt = PTIndex(lam=p[l] - 0.5, kappa_pt=m[l - 1], J=s.J[l - 1])
        out.append(AngularFactor(n - l - 2, pt, 0.0, float(l - 1)))
    return out


def spherical_angular_factors(params: ModelParams, s: SphericalState) -> list:
    """Factors k = 1..n-1; factor k lives on theta^(k) with weight sin^(n-1-k)."""
    validate_state(params, s)
    n, p = params.n, params.p
    m = m_chain_spherical(params, s)  # m[0] = m_1, ..., m[n-1] = m_n
    out = []
    for k in range(1, n):
        pt = PTIndex(lam=m[k], kappa_pt=p[k - 1] - 0.5, J=s.J[k - 1])
        out.append(AngularFactor(k - 1, pt, float(n - 1 - k), 0.0))
    return out


def angular_factors(params: ModelParams, state: State) -> list:
    if isinstance(state, ParabolicState):
        return parabolic_angular_factors(params, state)
    return spherical_angular_factors(params, state)


def _angular_product(factors, angles, count):
    angles = np.asarray(angles, dtype=float)
    scalar = angles.ndim == 1
    angles = np.atleast_2d(angles)
    if angles.shape[1] != count:
        raise DomainError(f"expected {count} angles, got {angles.shape[1]}")
    val = np.ones(angles.shape[0])
    for f in factors:
        val = val * f(angles[:, f.angle_index])
    return float(val[0]) if scalar else val


def angular_parabolic(params: ModelParams, s: ParabolicState, angles):
    """Angular part in the parabolic chart; ``angles`` = (theta^(1), ..., theta^(n-2))."""
    return _angular_product(parabolic_angular_factors(params, s), angles, params.n - 2)


def angular_spherical(params: ModelParams, s: SphericalState, angles):
    """Angular part in the spherical chart; ``angles`` = (theta^(1), ..., theta^(n-1))."""
    return _angular_product(spherical_angular_factors(params, s), angles, params.n - 1)


# -- radial blocks -----------------------------------------------------------


def oscillator_scale(params: ModelParams, N: float) -> float:
    """sqrt(-2 M E_N) / hbar = M gamma / (hbar^2 N) = 1 / (a N)."""
    return 1.0 / (params.a * N)


def radial_parabolic(params: ModelParams, s: ParabolicState, xi, eta):
    """(xi, eta) block of the parabolic bound state.

    Normalised against (xi^2 + eta^2)(xi eta)^(n-2) d(xi) d(eta).  The
    squared constant is 2 N1! N2! c^(n+2 sigma) / (N Gamma(N1+alpha+1) Gamma(N2+alpha+1))
    with alpha = sigma + (n-3)/2; the factor 2 comes from splitting the
    (xi^2 + eta^2) Jacobian into two oscillator moments that sum to 2N/c.
    """
    validate_state(params, s)
    n = params.n
    sig = sigma(params, s)
    N = principal_number(params, s)
    c = oscillator_scale(params, N)
    alpha = sig + 0.5 * (n - 3)
    log_c = 0.5 * (
        math.log(2.0)
        + math.lgamma(s.N1 + 1.0)
        + math.lgamma(s.N2 + 1.0)
        - math.log(N)
        - math.lgamma(s.N1 + alpha + 1.0)
        - math.lgamma(s.N2 + alpha + 1.0)
    ) + 0.5 * (n + 2.0 * sig) * math.log(c)
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    u, v = c * xi * xi, c * eta * eta
    val = np.exp(log_c + xlogy(sig, xi * eta) - 0.5 * (u + v))
    val = val * laguerre_poly(s.N1, alpha, u) * laguerre_poly(s.N2, alpha, v)
    return val if np.ndim(val) else float(val)


def coulomb_radial(params: ModelParams, m1: float, Nr: int, r):
    """Radial Coulomb function for effective angular index m1 and radial number Nr.

    Normalised against r^(n-1) dr.
    """
    n = params.n
    a = params.a
    N = Nr + m1 + 0.5
    k = 2.0 / (a * N)
    log_c = 0.5 * (math.log(a) + math.lgamma(Nr + 1.0) - math.log(4.0) - math.lgamma(Nr + 2.0 * m1 + 1.0))
    log_c += (m1 + 1.5) * math.log(k)
    r = np.asarray(r, dtype=float)
    val = np.exp(log_c + xlogy(m1 - 0.5 * (n - 2), r) - 0.5 * k * r)
    val = val * laguerre_poly(Nr, 2.0 * m1, k * r)
    return val if np.ndim(val) else float(val)


def radial_spherical(params: ModelParams, s: SphericalState, r):
    validate_state(params, s)
    m1 = m_chain_spherical(params, s)[0]
    return coulomb_radial(params, m1, s.Nr, r)


# -- full wavefunctions -------------------------------------------------------


def psi_parabolic_array(params: ModelParams, s: ParabolicState, xi, eta, theta):
    return radial_parabolic(params, s, xi, eta) * angular_parabolic(params, s, np.atleast_2d(theta))


def psi_spherical_array(params: ModelParams, s: SphericalState, r, theta):
    return radial_spherical(params, s, r) * angular_spherical(params, s, np.atleast_2d(theta))


def psi_parabolic(params: ModelParams, s: ParabolicState, point: coords.ParabolicPoint) -> float:
    """Normalised bound state in parabolic rotational coordinates."""
    if point.n != params.n:
        raise DomainError(f"point has dimension {point.n}, expected {params.n}")
    return float(psi_parabolic_array(params, s, [point.xi], [point.eta], [point.theta])[0])


def psi_spherical(params: ModelParams, s: SphericalState, point: coords.SphericalPoint) -> float:
    """Normalised bound state in spherical coordinates."""
    if point.n != params.n:
        raise DomainError(f"point has dimension {point.n}, expected {params.n}")
    return float(psi_spherical_array(params, s, [point.r], [point.theta])[0])


def psi_cartesian_array(params: ModelParams, state: State, x):
    """Evaluate a state at Cartesian points (m, n), mapping through its own chart."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if isinstance(state, ParabolicState):
        xi, eta, theta = coords.cartesian_to_parabolic_array(x)
        return psi_parabolic_array(params, state, xi, eta, theta)
    r, theta = coords.cartesian_to_spherical_array(x)
    return psi_spherical_array(params, state, r, theta)


def in_domain(system: str, x) -> np.ndarray:
    """Mask of Cartesian points inside the chart's quadrant."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if system == "parabolic":
        return np.all(x[:, :-1] > 0.0, axis=1)
    return np.all(x > 0.0, axis=1)


# -- radial Green's function ------------------------------------------------


@dataclass(frozen=True)
class GreenParams:
    """kappa_c = -2 gamma / (hbar omega), omega = 2 sqrt(-2E/M)."""

    kappa_c: float
    omega: float
    m1: float


def green_params(params: ModelParams, m1: float, E: float) -> GreenParams:
    if not E < 0:
        raise DomainError(f"the radial Green's function is implemented for E < 0, got {E!r}")
    if not m1 > -0.5:
        raise DomainError(f"m1 must exceed -1/2, got {m1!r}")
    omega = 2.0 * math.sqrt(-2.0 * E / params.mass)
    return GreenParams(kappa_c=-2.0 * params.gamma / (params.hbar * omega), omega=omega, m1=float(m1))


def nearest_pole(params: ModelParams, m1: float, E: float):
    """(Nr, E_pole) of the bound state nearest to E in the m1 sector."""
    g = green_params(params, m1, E)
    Nr = max(0, round(-(g.kappa_c + m1 + 0.5)))
    return Nr, energy(params, Nr + m1 + 0.5)


def _green_core(params, m1, E, r_small, r_large):
    if not 0 < r_small < r_large:
        raise DomainError(f"need 0 < r_small < r_large, got {r_small!r}, {r_large!r}")
    g = green_params(params, m1, E)
    scale = params.mass * g.omega / params.hbar
    w = whittaker_w(-g.kappa_c, m1, scale * r_large)
    m = whittaker_m(-g.kappa_c, m1, scale * r_small)
    geo = (r_small * r_large) ** (0.5 * (params.n - 1))
    return g, w, m, geo


def green_radial(params: ModelParams, m1: float, E: float, r_small: float, r_large: float) -> float:
    """Real radial Green's function in the m1 sector, for E < 0 and r_small < r_large.

        G = Gamma(kappa + m1 + 1/2) / (omega Gamma(2 m1 + 1))
            * W_{-kappa,m1}(M omega r_large / hbar) M_{-kappa,m1}(M omega r_small / hbar)
            / (r_small r_large)^((n-1)/2)

    The conventional overall 1/i is dropped.  With this convention
    (E_N - E) G -> (hbar/2) R_N(r_small) R_N(r_large) at each pole, R_N
    being :func:`coulomb_radial`.
    """
    Nr, e_pole = nearest_pole(params, m1, E)
    if abs(E - e_pole) <= POLE_GUARD * abs(e_pole):
        raise PoleError(f"E = {E!r} is within {POLE_GUARD:g} (relative) of the pole E = {e_pole!r}")
    g, w, m, geo = _green_core(params, m1, E, r_small, r_large)
    pre = math.gamma(g.kappa_c + m1 + 0.5) / (g.omega * math.gamma(2.0 * m1 + 1.0))
    return pre * w * m / geo


def inverse_green_radial(params: ModelParams, m1: float, E: float, r_small: float, r_large: float) -> float:
    """1 / green_radial, finite and sign-changing through every pole."""
    g, w, m, geo = _green_core(params, m1, E, r_small, r_large)
    if w == 0.0 or m == 0.0:
        raise SingularPointError("Whittaker factor vanishes; 1/G is unbounded here")
    return rgamma(g.kappa_c + m1 + 0.5) * g.omega * math.gamma(2.0 * m1 + 1.0) * geo / (w * m)


def green_radial_symmetric(params: ModelParams, m1: float, E: float, r: float, r_prime: float) -> float:
    """G(r, r') with W attached to the larger and M to the smaller radius."""
    lo, hi = sorted((r, r_prime))
    return green_radial(params, m1, E, lo, hi)
