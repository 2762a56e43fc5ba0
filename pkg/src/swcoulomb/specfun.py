"""Special functions needed by the closed-form bound-state solution.

Everything here is real-valued double precision.  Polynomial families
(Jacobi, Laguerre) are vectorised over their argument; the confluent
hypergeometric and Whittaker functions are scalar.

Functions
---------
log_gamma        ln Gamma(x) for x > 0
rgamma           1/Gamma(x) for any real x (zero at the poles of Gamma)
jacobi_poly      P_J^(a,b)(x) by the three-term recurrence in degree
laguerre_poly    L_N^alpha(x) by the three-term recurrence in degree
kummer_m         M(a, b, x), power series with Kummer's transformation for x < 0
kummer_u         Tricomi U(a, b, x), x > 0
whittaker_m      M_{kappa,mu}(x)
whittaker_w      W_{kappa,mu}(x)
bessel_i         modified Bessel I_nu(x), nu >= 0, x >= 0
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import roots_genlaguerre

from .errors import ConvergenceError, DomainError, PoleError

# I_nu switches from the ascending series to the large-argument expansion here.
BESSEL_SERIES_MAX_X = 20.0
# Gauss-Laguerre order for the Laplace integral of U (a > 0, x > 1).
U_QUADRATURE_ORDER = 160
# Inward integration for U starts at max(x, this + 3(|a| + |a-b+1|)).
U_ASYMPTOTIC_START = 40.0
# Smallest a for which the Laplace-integral rule is used.
LAPLACE_MIN_A = 0.25


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for power series.

    Parameters
    ----------
    max_terms : int
        Hard cap on the number of terms; exceeding it raises
        :class:`ConvergenceError`.
    rel_tol : float
        Stop once the current term is below ``rel_tol * |partial sum|`` and
        the terms are decreasing geometrically.
    """

    max_terms: int = 5000
    rel_tol: float = 1e-17

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")


DEFAULT_CONTROL = SeriesControl()


def _is_nonpositive_int(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def _sinpi(x: float) -> float:
    # argument reduction keeps sin(pi x) accurate near the integers
    k = round(x)
    s = math.sin(math.pi * (x - k))
    return -s if k % 2 else s


def log_gamma(x: float) -> float:
    """Return ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def rgamma(x: float) -> float:
    """Reciprocal gamma function, entire in x; zero at 0, -1, -2, ..."""
    if x > 0:
        if x > 170.0:
            return math.exp(-math.lgamma(x))
        return 1.0 / math.gamma(x)
    if float(x).is_integer():
        return 0.0
    # reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    return _sinpi(x) * math.exp(math.lgamma(1.0 - x)) / math.pi


def _check_degree(k, name):
    if int(k) != k or k < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {k!r}")
    return int(k)


def jacobi_poly(J: int, a: float, b: float, x):
    """Jacobi polynomial P_J^(a,b)(x).

    Uses the standard three-term recurrence in the degree, which is stable
    on [-1, 1].  ``x`` may be a scalar or an array.
    """
    J = _check_degree(J, "J")
    if not (a > -1 and b > -1):
        raise DomainError(f"Jacobi parameters must exceed -1, got a={a!r}, b={b!r}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if J == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    ab2 = a * a - b * b
    for k in range(2, J + 1):
        s = 2 * k + a + b
        c0 = 2.0 * k * (k + a + b) * (s - 2.0)
        c1 = (s - 1.0) * (s * (s - 2.0) * x + ab2)
        c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s
        p_prev, p = p, (c1 * p - c2 * p_prev) / c0
    return p if p.ndim else float(p)


def _laguerre_unchecked(N, alpha, x):
    x = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x)
    if N == 0:
        return l_prev
    l = 1.0 + alpha - x
    for k in range(1, N):
        l_prev, l = l, ((2 * k + 1 + alpha - x) * l - (k + alpha) * l_prev) / (k + 1)
    return l


def laguerre_poly(N: int, alpha: float, x):
    """Generalised Laguerre polynomial L_N^alpha(x) (scalar or array ``x``)."""
    N = _check_degree(N, "N")
    if not alpha > -1:
        raise DomainError(f"Laguerre parameter alpha must exceed -1, got {alpha!r}")
    out = _laguerre_unchecked(N, alpha, x)
    return out if out.ndim else float(out)


def _m_series(a, b, x, control):
    total = 1.0
    term = 1.0
    for s in range(control.max_terms):
        term *= (a + s) / (b + s) * x / (s + 1)
        total += term
        if term == 0.0:
            return total
        if a + s + 1 > 0:
            ratio = abs((a + s + 1) / (b + s + 1) * x / (s + 2))
            if ratio < 1.0 and abs(term) <= control.rel_tol * abs(total) * (1.0 - ratio):
                return total
        if not math.isfinite(total):
            raise ConvergenceError(f"M({a}, {b}, {x}) series overflowed")
    raise ConvergenceError(
        f"M({a}, {b}, {x}) did not converge within {control.max_terms} terms"
    )


def kummer_m(a: float, b: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Kummer's confluent hypergeometric function M(a, b, x) = 1F1(a; b; x).

    Summed as a power series.  For x < 0 the Kummer transformation
    M(a, b, x) = e^x M(b - a, b, -x) is applied first so that the summed
    series has no sign alternation (unless a is a non-positive integer,
    in which case the terminating polynomial is summed directly).
    """
    if _is_nonpositive_int(b):
        raise DomainError(f"kummer_m: b must not be a non-positive integer, got {b!r}")
    if x == 0.0:
        return 1.0
    if x < 0 and not _is_nonpositive_int(a):
        return math.exp(x) * _m_series(b - a, b, -x, control)
    return _m_series(a, b, x, control)


@lru_cache(maxsize=512)
def _laguerre_rule(order, alpha):
    return roots_genlaguerre(order, alpha)


def _u_laplace(a, b, x, order=U_QUADRATURE_ORDER):
    # U = x^-a / Gamma(a) * int_0^inf e^-s s^(a-1) (1 + s/x)^(b-a-1) ds, a > 0
    s, w = _laguerre_rule(order, a - 1.0)
    integral = float(np.dot(w, (1.0 + s / x) ** (b - a - 1.0)))
    return math.exp(-a * math.log(x) - math.lgamma(a)) * integral


def _u_polynomial(k, b, x):
    if b > 0:
        # Laguerre recurrence is stable for alpha = b - 1 > -1
        return (-1) ** k * math.factorial(k) * float(_laguerre_unchecked(k, b - 1.0, x))
    # U(-k, b, x) = (-1)^k sum_s C(k, s) (b+s)_{k-s} (-x)^s
    total = 0.0
    for s in range(k + 1):
        poch = 1.0
        for j in range(k - s):
            poch *= b + s + j
        total += math.comb(k, s) * poch * (-x) ** s
    return (-1) ** k * total


def _u_asymptotic(a, b, x):
    # x^a U(a, b, x) ~ sum_s (a)_s (a-b+1)_s / (s! (-x)^s), optimally truncated
    term = 1.0
    total = 1.0
    prev = math.inf
    for s in range(500):
        nxt = term * (a + s) * (a - b + 1.0 + s) / ((s + 1) * -x)
        if nxt == 0.0 or abs(nxt) >= prev:
            break
        term = nxt
        total += term
        prev = abs(term)
        if prev <= 1e-17 * abs(total):
            break
    return total * x ** (-a)


def _w_from_infinity(kappa, mu, x):
    # W is recessive at infinity, so inward integration of
    # W'' = (1/4 - kappa/t + (mu^2 - 1/4)/t^2) W is stable.
    a = mu - kappa + 0.5
    b = 2.0 * mu + 1.0
    x0 = max(x, U_ASYMPTOTIC_START + 3.0 * (abs(a) + abs(a - b + 1.0)))
    u0 = _u_asymptotic(a, b, x0)
    du0 = -a * _u_asymptotic(a + 1.0, b + 1.0, x0)
    # scale out e^{-x0/2}; the ODE is linear so the factor is restored at the end
    log_pre = (mu + 0.5) * math.log(x0)
    w0 = u0
    dw0 = du0 + (-0.5 + (mu + 0.5) / x0) * u0
    if x0 == x:
        return math.exp(-0.5 * x0 + log_pre) * w0

    def rhs(t, y):
        return (y[1], (0.25 - kappa / t + (mu * mu - 0.25) / (t * t)) * y[0])

    sol = solve_ivp(rhs, (x0, x), (w0, dw0), method="DOP853", rtol=1e-13, atol=1e-300)
    if not sol.success:
        raise ConvergenceError(f"W_{{{kappa},{mu}}}({x}) integration failed: {sol.message}")
    return math.exp(-0.5 * x0 + log_pre) * float(sol.y[0, -1])


def kummer_u(a: float, b: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Tricomi's confluent hypergeometric function U(a, b, x) for x > 0.

    Strategy, in order of precedence:

    * a = -k (k = 0, 1, ...): the terminating polynomial
      U(-k, b, x) = (-1)^k k! L_k^(b-1)(x); likewise when a - b + 1 = -k via
      U(a, b, x) = x^(1-b) U(a-b+1, 2-b, x).
    * a >= 1/4 and x > 1: Laplace integral by generalised Gauss-Laguerre
      (smaller a puts a near-singular s^(a-1) weight into the rule).
    * otherwise: the Whittaker equation is integrated inwards (DOP853,
      rtol 1e-13) from a starting point deep in the asymptotic region, where
      the optimally truncated asymptotic series supplies U and U'.

    Non-integer and integer b are treated identically; there is no
    Gamma-weighted combination of M-solutions and hence no removable
    singularity at integer b.  ``control`` is accepted for signature
    symmetry with the other evaluators.
    """
    if not x > 0:
        raise DomainError(f"kummer_u requires x > 0, got {x!r}")
    if a == 0.0:
        return 1.0
    if _is_nonpositive_int(a):
        return _u_polynomial(int(-a), b, x)
    if _is_nonpositive_int(a - b + 1.0):
        return x ** (1.0 - b) * _u_polynomial(int(b - a - 1.0), 2.0 - b, x)
    if a >= LAPLACE_MIN_A and x > 1.0:
        val = _u_laplace(a, b, x)
    else:
        mu = 0.5 * (b - 1.0)
        kappa = 0.5 * b - a
        val = _w_from_infinity(kappa, mu, x) * math.exp(0.5 * x - (mu + 0.5) * math.log(x))
    if not math.isfinite(val):
        raise PoleError(f"U({a}, {b}, {x}) is not finite in double precision")
    return val


def whittaker_m(kappa: float, mu: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Whittaker function M_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} M(mu-kappa+1/2, 2mu+1, x)."""
    if not x > 0:
        raise DomainError(f"whittaker_m requires x > 0, got {x!r}")
    if _is_nonpositive_int(2.0 * mu + 1.0):
        raise DomainError(f"whittaker_m: 2*mu+1 must not be a non-positive integer (mu={mu!r})")
    m = kummer_m(mu - kappa + 0.5, 2.0 * mu + 1.0, x, control)
    return math.exp(-0.5 * x + (mu + 0.5) * math.log(x)) * m


def whittaker_w(kappa: float, mu: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Whittaker function W_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} U(mu-kappa+1/2, 2mu+1, x)."""
    if not x > 0:
        raise DomainError(f"whittaker_w requires x > 0, got {x!r}")
    u = kummer_u(mu - kappa + 0.5, 2.0 * mu + 1.0, x, control)
    return math.exp(-0.5 * x + (mu + 0.5) * math.log(x)) * u


def _bessel_i_series(nu, x, control):
    if x == 0.0:
        return 1.0 if nu == 0 else 0.0
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    for k in range(1, control.max_terms):
        term *= q / (k * (k + nu))
        total += term
        if term <= control.rel_tol * total and q < k * (k + nu):
            break
    else:
        raise ConvergenceError(f"I_{nu}({x}) series did not converge")
    return math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0)) * total


def _bessel_i_asymptotic(nu, x):
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    prev = math.inf
    for k in range(1, 200):
        term *= -(mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(term) >= prev:
            break  # optimal truncation of the divergent expansion
        total += term
        prev = abs(term)
        if prev <= 1e-17 * abs(total):
            break
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * total


def bessel_i(nu: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0.

    Ascending series for x <= 20 (or whenever nu^2 is comparable to x, where
    the large-argument expansion is poor); the Hankel large-argument
    expansion, optimally truncated, beyond.
    """
    if not nu >= 0:
        raise DomainError(f"bessel_i requires nu >= 0, got {nu!r}")
    if not x >= 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x!r}")
    if x <= BESSEL_SERIES_MAX_X or x <= nu * nu:
        return _bessel_i_series(nu, x, control)
    return _bessel_i_asymptotic(nu, x)


def bessel_i_scaled(nu: float, w2: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Entire function I_nu(w) / (w/2)^nu as a function of w^2 (any real w^2).

    For negative w^2 this is J_nu(|w|) / (|w|/2)^nu.  Orders in (-1, 0) are
    accepted here because the scaled function stays entire there.
    """
    if not nu > -1:
        raise DomainError(f"bessel_i_scaled requires nu > -1, got {nu!r}")
    if w2 > 0:
        w = math.sqrt(w2)
        if w > BESSEL_SERIES_MAX_X and w > nu * nu:
            return _bessel_i_asymptotic(nu, w) * math.exp(-nu * math.log(0.5 * w))
    q = 0.25 * w2
    term = 1.0
    total = 1.0
    for k in range(1, control.max_terms):
        term *= q / (k * (k + nu))
        total += term
        if abs(term) <= control.rel_tol * abs(total) and abs(q) < k * (k + nu):
            break
    else:
        raise ConvergenceError(f"scaled Bessel series at w^2={w2} did not converge")
    return total * math.exp(-math.lgamma(nu + 1.0))
