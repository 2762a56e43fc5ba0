"""Independent numerical checks of the closed-form results.

Checks
------
orthonormality_check   <a|b> by factorised Gauss quadrature (Jacobi in cos 2theta,
                       generalised Laguerre in the radial variables)
hamiltonian_residual   |H psi - E psi| with a Cartesian finite-difference Laplacian
radial_oracle          finite-difference eigenvalues of the radial Coulomb problem
hille_hardy_identity   truncated bilinear Laguerre sum against its Bessel closed form
pole_scan              zeros of 1/G located by bracketing and bisection
spectrum_cross_check   parabolic vs spherical energy sets, degeneracies reported

Every check returns plain values or a :class:`ResidualReport`.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import roots_genlaguerre, roots_jacobi

from . import coords
from .errors import BoxTooSmallError, BracketError, DomainError, QuadratureError, SingularPointError
from .model import ModelParams, potential_cartesian_array
from .quantum import (
    ParabolicState,
    check_system,
    energy,
    enumerate_level,
    level_energy,
    m_chain_parabolic,
    m_chain_spherical,
    n_min,
    principal_number,
    sigma,
    system_of,
    validate_state,
)
from .specfun import bessel_i_scaled
from .wavefn import (
    angular_factors,
    coulomb_radial,
    green_params,
    in_domain,
    inverse_green_radial,
    psi_cartesian_array,
    radial_parabolic,
    radial_spherical,
)

BASE_ORDER = 64
# Sample points keep this many difference steps away from chart hyperplanes.
SINGULAR_MARGIN = 100.0
# Default difference step, in units of a*N (the length scale of the state).
STEP_SCALE = 1e-3
# Parabolic (t + u) beyond which the 2D Laguerre weights underflow.
_WEIGHT_CUTOFF = 600.0
# Largest ground-state mass fraction allowed in the outer tenth of the oracle box.
BOX_TAIL_LIMIT = 1e-4


@dataclass(frozen=True)
class ResidualReport:
    """Outcome of one check.  ``passed`` is always ``max_residual <= tolerance``."""

    check_name: str
    max_residual: float
    mean_residual: float
    sample_count: int
    tolerance: float
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.sample_count < 1:
            raise DomainError("a report needs at least one sample")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance)

    @classmethod
    def from_residuals(cls, name, residuals, tolerance, **details):
        res = np.abs(np.asarray(residuals, dtype=float).ravel())
        return cls(name, float(res.max()), float(res.mean()), int(res.size), float(tolerance), details)

    def to_dict(self, params: ModelParams | None = None) -> dict:
        return {
            "check_name": self.check_name,
            "params_digest": params_digest(params) if params is not None else None,
            "residuals": {"max": self.max_residual, "mean": self.mean_residual, "count": self.sample_count},
            "tolerance": self.tolerance,
            "passed": self.passed,
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    return obj


def params_digest(params: ModelParams) -> str:
    blob = json.dumps(params.as_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass(frozen=True)
class QuadratureGrid:
    """A Gauss rule: nodes, positive weights, the interval and the order."""

    nodes: np.ndarray
    weights: np.ndarray
    domain: tuple
    order: int

    def __post_init__(self):
        if np.any(self.weights <= 0):
            raise QuadratureError("quadrature weights must be positive")


def jacobi_grid(order: int, alpha: float, beta: float) -> QuadratureGrid:
    """Gauss rule for (1-u)^alpha (1+u)^beta on (-1, 1)."""
    u, w = roots_jacobi(order, alpha, beta)
    return QuadratureGrid(u, w, (-1.0, 1.0), order)


def laguerre_grid(order: int, alpha: float) -> QuadratureGrid:
    """Gauss rule for t^alpha e^(-t) on (0, inf)."""
    t, w = roots_genlaguerre(order, alpha)
    keep = w > 0  # trailing weights may underflow to zero
    return QuadratureGrid(t[keep], w[keep], (0.0, math.inf), order)


@dataclass(frozen=True)
class OracleConfig:
    """Finite-difference radial eigensolver settings.

    ``r_max`` is in units of a*N^2 with N the principal number of the
    highest requested level.
    """

    grid_points: int = 20000
    r_max: float = 60.0
    eigen_count: int = 3

    def __post_init__(self):
        if int(self.grid_points) != self.grid_points or self.grid_points < 100:
            raise DomainError("grid_points must be an integer >= 100")
        if not self.r_max > 0:
            raise DomainError("r_max must be positive")
        if int(self.eigen_count) != self.eigen_count or self.eigen_count < 1:
            raise DomainError("eigen_count must be a positive integer")


# -- orthonormality -------------------------------------------------------


def _angular_overlap(fa, fb, order):
    # u = cos 2theta turns d(theta) into du / (2 sqrt(1 - u^2)); the Jacobi weight
    # absorbs sin^(la+lb) cos^(ka+kb), leaving a polynomial in u.
    al = 0.5 * (fa.pt.lam + fb.pt.lam)
    be = 0.5 * (fa.pt.kappa_pt + fb.pt.kappa_pt)
    g = jacobi_grid(order, al, be)
    theta = 0.5 * np.arccos(g.nodes)
    u = g.nodes
    weight = np.sin(theta) ** fa.weight_sin * np.cos(theta) ** fa.weight_cos
    jac = 2.0 * np.sqrt(1.0 - u * u) * (1.0 - u) ** al * (1.0 + u) ** be
    return float(np.sum(g.weights * fa(theta) * fb(theta) * weight / jac))


def _radial_overlap_parabolic(params, a, b, order):
    n = params.n
    ca = 1.0 / (params.a * principal_number(params, a))
    cb = 1.0 / (params.a * principal_number(params, b))
    c = 0.5 * (ca + cb)
    alpha = 0.5 * (sigma(params, a) + sigma(params, b) + n - 3)
    g = laguerre_grid(order, alpha)
    T, U = np.meshgrid(g.nodes, g.nodes, indexing="ij")
    W = np.outer(g.weights, g.weights)
    keep = (T + U) < _WEIGHT_CUTOFF
    t, u, w = T[keep], U[keep], W[keep]
    xi, eta = np.sqrt(t / c), np.sqrt(u / c)
    measure = (xi * xi + eta * eta) * (xi * eta) ** (n - 2)
    # d(xi) d(eta) = dt du / (4 c sqrt(t u))
    jac = 4.0 * c * np.sqrt(t * u) * (t * u) ** alpha * np.exp(-(t + u))
    f = radial_parabolic(params, a, xi, eta) * radial_parabolic(params, b, xi, eta)
    return float(np.sum(w * f * measure / jac))


def _radial_overlap_spherical(params, a, b, order):
    n = params.n
    m1a = m_chain_spherical(params, a)[0]
    m1b = m_chain_spherical(params, b)[0]
    k = 1.0 / (params.a * principal_number(params, a)) + 1.0 / (params.a * principal_number(params, b))
    alpha = m1a + m1b + 1.0
    g = laguerre_grid(order, alpha)
    r = g.nodes / k
    f = radial_spherical(params, a, r) * radial_spherical(params, b, r) * r ** (n - 1)
    jac = k * g.nodes**alpha * np.exp(-g.nodes)
    return float(np.sum(g.weights * f / jac))


def overlap(params: ModelParams, a, b, order: int = BASE_ORDER) -> float:
    """<a|b> over the chart's quadrant, as a product of 1D (and one 2D) integrals."""
    if type(a) is not type(b):
        raise DomainError("states must belong to the same coordinate system")
    validate_state(params, a)
    validate_state(params, b)
    fa_list, fb_list = angular_factors(params, a), angular_factors(params, b)
    value = 1.0
    for fa, fb in zip(fa_list, fb_list):
        value *= _angular_overlap(fa, fb, order)
    if isinstance(a, ParabolicState):
        return value * _radial_overlap_parabolic(params, a, b, order)
    return value * _radial_overlap_spherical(params, a, b, order)


def orthonormality_check(
    params: ModelParams, system: str, state_a, state_b, tolerance: float = 1e-7, order: int = BASE_ORDER
) -> ResidualReport:
    """|<a|b> - delta_ab| with an order-doubling self-consistency guard.

    Raises
    ------
    QuadratureError
        If the rules of order ``order`` and ``2*order`` disagree by more
        than tolerance/10.
    """
    check_system(system)
    for s in (state_a, state_b):
        if system_of(s) != system:
            raise DomainError(f"state {s} does not belong to the {system} system")
    lo = overlap(params, state_a, state_b, order)
    hi = overlap(params, state_a, state_b, 2 * order)
    if abs(hi - lo) > tolerance / 10:
        raise QuadratureError(f"orders {order} and {2 * order} disagree by {abs(hi - lo):.3e}")
    delta = 1.0 if state_a == state_b else 0.0
    return ResidualReport.from_residuals(
        "orthonormality",
        [hi - delta],
        tolerance,
        system=system,
        state_a=list(state_a.labels()),
        state_b=list(state_b.labels()),
        overlap=hi,
        order_gap=abs(hi - lo),
    )


def measure_factorization_error(params: ModelParams, system: str, count: int = 20, seed: int = 0) -> float:
    """Max relative gap between (radial weight) x (angular weights) and sqrt(g).

    The angular weights are the ones the wavefunction factors are
    normalised against, so this ties the quadrature to the chart metric.
    """
    check_system(system)
    rng = np.random.default_rng(seed)
    n = params.n
    if system == "parabolic":
        s = ParabolicState(0, 0, (0,) * (n - 2))
        xi, eta = rng.uniform(0.1, 3.0, count), rng.uniform(0.1, 3.0, count)
        theta = rng.uniform(0.05, coords.HALF_PI - 0.05, (count, n - 2))
        _, sqrt_g = coords.metric_parabolic_array(xi, eta, theta)
        prod = (xi * xi + eta * eta) * (xi * eta) ** (n - 2)
    else:
        s = m_chain_free_state(params)
        r = rng.uniform(0.1, 3.0, count)
        theta = rng.uniform(0.05, coords.HALF_PI - 0.05, (count, n - 1))
        _, sqrt_g = coords.metric_spherical_array(r, theta)
        prod = r ** (n - 1)
    for f in angular_factors(params, s):
        t = theta[:, f.angle_index]
        prod = prod * np.sin(t) ** f.weight_sin * np.cos(t) ** f.weight_cos
    return float(np.max(np.abs(prod / sqrt_g - 1.0)))


def m_chain_free_state(params):
    from .quantum import SphericalState

    return SphericalState(0, (0,) * (params.n - 1))


# -- Hamiltonian residual -----------------------------------------------------


def default_step(params: ModelParams, state) -> float:
    return STEP_SCALE * params.a * principal_number(params, state)


def _chart_margin(system, x):
    cols = x[:, :-1] if system == "parabolic" else x
    return np.min(cols, axis=1)


def sample_points(params: ModelParams, system: str, state, count: int = 50, seed: int = 0, step=None) -> np.ndarray:
    """Random in-quadrant points at radii 0.1..1.5 a N^2, clear of the chart hyperplanes.

    Parabolic points may have either sign of x^(n).
    """
    check_system(system)
    rng = np.random.default_rng(seed)
    N = principal_number(params, state)
    h = default_step(params, state) if step is None else step
    scale = params.a * N * N
    out = []
    while len(out) < count:
        d = np.abs(rng.standard_normal(params.n))
        if system == "parabolic" and rng.random() < 0.5:
            d[-1] = -d[-1]
        x = d / np.linalg.norm(d) * rng.uniform(0.1, 1.5) * scale
        if _chart_margin(system, x[None, :])[0] >= SINGULAR_MARGIN * h:
            out.append(x)
    return np.array(out)


def laplacian(f, x, h):
    """Second-order central-difference Laplacian of f at points x (m, n)."""
    m, n = x.shape
    shifted = [x]
    for i in range(n):
        for sgn in (1.0, -1.0):
            y = x.copy()
            y[:, i] += sgn * h
            shifted.append(y)
    vals = f(np.concatenate(shifted)).reshape(2 * n + 1, m)
    centre = vals[0]
    return (np.sum(vals[1:], axis=0) - 2 * n * centre) / (h * h), centre


def hamiltonian_residual(
    params: ModelParams, system: str, state, points, tolerance: float = 1e-5, step=None
) -> ResidualReport:
    """max |H psi - E_N psi| / (|E_N| max|psi|) over the sample points.

    The Laplacian uses central differences at steps h and h/2 combined by
    Richardson extrapolation.  ``step`` defaults to 1e-3 a N, which keeps
    rounding (~eps/h^2) and truncation (~(h/aN)^4) both well below 1e-6
    for N up to a few tens.

    Raises
    ------
    SingularPointError
        If a point is outside the quadrant or within 100 h of a chart
        hyperplane.
    """
    check_system(system)
    if system_of(state) != system:
        raise DomainError(f"state {state} does not belong to the {system} system")
    validate_state(params, state)
    x = coords.as_cartesian_array(points) if not isinstance(points, np.ndarray) else np.atleast_2d(points)
    if x.shape[1] != params.n:
        raise DomainError(f"points have dimension {x.shape[1]}, expected {params.n}")
    h = default_step(params, state) if step is None else float(step)
    if np.any(_chart_margin(system, x) < SINGULAR_MARGIN * h):
        raise SingularPointError(f"sample point closer than {SINGULAR_MARGIN:g} h to a coordinate hyperplane")

    def f(y):
        return psi_cartesian_array(params, state, y)

    lap_h, psi = laplacian(f, x, h)
    lap_h2, _ = laplacian(f, x, 0.5 * h)
    lap = (4.0 * lap_h2 - lap_h) / 3.0
    E = energy(params, principal_number(params, state))
    kinetic = -0.5 * params.hbar**2 / params.mass
    h_psi = kinetic * lap + potential_cartesian_array(params, x) * psi
    scale = abs(E) * np.max(np.abs(psi))
    res = np.abs(h_psi - E * psi) / scale
    raw = np.abs(kinetic * lap_h + potential_cartesian_array(params, x) * psi - E * psi) / scale
    return ResidualReport.from_residuals(
        "hamiltonian_residual",
        res,
        tolerance,
        system=system,
        state=list(state.labels()),
        energy=E,
        step=h,
        unextrapolated_max=float(raw.max()),
    )


# -- radial finite-difference oracle ----------------------------------------


def radial_oracle(params: ModelParams, m1: float, cfg: OracleConfig = OracleConfig()) -> list:
    """Lowest eigenvalues of -hbar^2/2M u'' + [-gamma/r + hbar^2 (m1^2 - 1/4)/(2M r^2)] u.

    Three-point differences on a uniform grid over (0, r_max] with Dirichlet
    ends; the symmetric tridiagonal problem is solved by Sturm bisection.

    Raises
    ------
    BoxTooSmallError
        If more than 1e-4 of the lowest eigenvector's probability sits in
        the outer tenth of the box.  The Dirichlet wall pins the tail, so
        a thinner boundary layer would hide a truncated state.
    """
    if not m1 > -0.5:
        raise DomainError(f"m1 must exceed -1/2, got {m1!r}")
    N_top = m1 + 0.5 + cfg.eigen_count - 1
    r_max = cfg.r_max * params.a * N_top * N_top
    G = cfg.grid_points
    h = r_max / (G + 1)
    r = h * np.arange(1, G + 1)
    kin = params.hbar**2 / (2.0 * params.mass * h * h)
    V = -params.gamma / r + params.hbar**2 * (m1 * m1 - 0.25) / (2.0 * params.mass * r * r)
    d = 2.0 * kin + V
    e = np.full(G - 1, -kin)
    vals, vecs = eigh_tridiagonal(d, e, select="i", select_range=(0, cfg.eigen_count - 1), lapack_driver="stebz")
    ground = vecs[:, 0] ** 2
    tail = ground[int(0.9 * G) :].sum() / ground.sum()
    if tail > BOX_TAIL_LIMIT:
        raise BoxTooSmallError(f"{tail:.2e} of the ground-state mass lies in the outer 10% of the box")
    return [float(v) for v in vals]


def radial_oracle_report(params: ModelParams, m1: float, cfg: OracleConfig = OracleConfig(), tolerance=1e-3):
    vals = radial_oracle(params, m1, cfg)
    exact = [energy(params, k + m1 + 0.5) for k in range(cfg.eigen_count)]
    rel = [abs(v - e) / abs(e) for v, e in zip(vals, exact)]
    return ResidualReport.from_residuals(
        "radial_oracle", rel, tolerance, m1=m1, oracle=vals, closed_form=exact, grid_points=cfg.grid_points
    )


# -- Hille-Hardy -----------------------------------------------------------------


def hille_hardy_sides(alpha: float, x: float, y: float, z: float, terms: int):
    """(lhs, rhs) of the bilinear Laguerre generating function.

    lhs = sum_{k<=terms} k!/Gamma(k+alpha+1) L_k(x) L_k(y) z^k
    rhs = (xyz)^(-alpha/2) / (1-z) exp(-z(x+y)/(1-z)) I_alpha(2 sqrt(xyz)/(1-z))

    The rhs is evaluated through the entire function I_alpha(w)/(w/2)^alpha,
    which also covers z < 0.
    """
    if not alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {alpha!r}")
    if not abs(z) < 1:
        raise DomainError(f"|z| must be below 1, got {z!r}")
    if not (x > 0 and y > 0):
        raise DomainError("x and y must be positive")
    if int(terms) != terms or terms < 0:
        raise DomainError("terms must be a non-negative integer")
    lx_prev, lx = 0.0, 1.0
    ly_prev, ly = 0.0, 1.0
    lhs = 0.0
    for k in range(int(terms) + 1):
        coef = math.exp(math.lgamma(k + 1.0) - math.lgamma(k + alpha + 1.0))
        lhs += coef * lx * ly * z**k
        # L_{k+1} = ((2k+1+alpha-x) L_k - (k+alpha) L_{k-1}) / (k+1)
        lx_prev, lx = lx, ((2 * k + 1 + alpha - x) * lx - (k + alpha) * lx_prev) / (k + 1)
        ly_prev, ly = ly, ((2 * k + 1 + alpha - y) * ly - (k + alpha) * ly_prev) / (k + 1)
    w2 = 4.0 * x * y * z / (1.0 - z) ** 2
    rhs = (1.0 - z) ** (-alpha - 1.0) * math.exp(-z * (x + y) / (1.0 - z)) * bessel_i_scaled(alpha, w2)
    return lhs, rhs


def hille_hardy_identity(alpha: float, x: float, y: float, z: float, terms: int, tolerance: float = 1e-10):
    lhs, rhs = hille_hardy_sides(alpha, x, y, z, terms)
    return ResidualReport.from_residuals(
        "hille_hardy", [abs(lhs - rhs) / abs(rhs)], tolerance, alpha=alpha, x=x, y=y, z=z, terms=terms,
        lhs=lhs, rhs=rhs,
    )


# -- Green's-function poles ----------------------------------------------------


@dataclass(frozen=True)
class PoleResult:
    Nr: int
    located: float
    predicted: float
    gap: float
    gamma_condition: float


def pole_radii(params: ModelParams, m1: float, Nr: int) -> tuple:
    """Probe radii (0.75 r_peak, r_peak) on the outermost lobe of the Nr-th radial state.

    Away from the state's support the residue R(r)R(r') is tiny against the
    smooth part of G, and a zero of G sits within rounding of the pole;
    probing at the lobe maximum keeps the sign change of 1/G resolvable.
    """
    N = Nr + m1 + 0.5
    r = np.linspace(1e-3, 4.0, 4001) * params.a * N * N
    u = np.abs(coulomb_radial(params, m1, Nr, r)) * r ** (0.5 * (params.n - 1))
    peak = float(r[np.argmax(u)])
    return 0.75 * peak, peak


def pole_scan(
    params: ModelParams,
    m1: float,
    level_count: int,
    radii: tuple | None = None,
    bracket: float = 1e-3,
    xtol_rel: float = 1e-13,
) -> list:
    """Locate the first ``level_count`` poles of the radial Green's function.

    Each pole is bracketed in E_N (1 -/+ bracket) and bisected on the signed
    1/G, which changes sign through every simple pole (1/|G| only touches
    zero).  Bisection stops at xtol_rel |E_N|, well under 1e-10 absolute.
    ``radii`` fixes (r_small, r_large); by default :func:`pole_radii` picks
    them per level.

    Returns
    -------
    list of PoleResult
        ``gamma_condition`` is |kappa + m1 + 1/2 + N_r| at the located pole.
    """
    if int(level_count) != level_count or level_count < 1:
        raise DomainError("level_count must be a positive integer")
    out = []
    for Nr in range(int(level_count)):
        E_n = energy(params, Nr + m1 + 0.5)
        r_small, r_large = pole_radii(params, m1, Nr) if radii is None else radii

        def g(E):
            return inverse_green_radial(params, m1, E, r_small, r_large)

        lo, hi = E_n * (1 + bracket), E_n * (1 - bracket)  # lo < E_n < hi (E_n < 0)
        f_lo, f_hi = g(lo), g(hi)
        if f_lo == 0.0 or f_hi == 0.0 or math.copysign(1, f_lo) == math.copysign(1, f_hi):
            raise BracketError(f"1/G does not change sign around E_{Nr} = {E_n!r}")
        tol = xtol_rel * abs(E_n)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            f_mid = g(mid)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if math.copysign(1, f_mid) == math.copysign(1, f_lo):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        E = 0.5 * (lo + hi)
        gp = green_params(params, m1, E)
        out.append(PoleResult(Nr, E, E_n, abs(E - E_n), abs(gp.kappa_c + m1 + 0.5 + Nr)))
    return out


def pole_scan_report(params: ModelParams, m1: float, level_count: int = 3, tolerance: float = 1e-6):
    poles = pole_scan(params, m1, level_count)
    rel = [p.gap / abs(p.predicted) for p in poles]
    cond = max(p.gamma_condition for p in poles)
    return ResidualReport.from_residuals(
        "pole_scan",
        rel,
        tolerance,
        m1=m1,
        located=[p.located for p in poles],
        predicted=[p.predicted for p in poles],
        gamma_condition_max=cond,
        gamma_condition_ok=cond <= 1e-8,
    )


def green_residue(params: ModelParams, m1: float, Nr: int, r_small: float, r_large: float, k: int = 6) -> float:
    """(E_N - E) G at E = E_N (1 - 10^-k), approaching the pole from above."""
    from .wavefn import green_radial

    E_n = energy(params, Nr + m1 + 0.5)
    E = E_n * (1.0 - 10.0 ** (-k))
    return (E_n - E) * green_radial(params, m1, E, r_small, r_large)


# -- spectrum cross-check -----------------------------------------------------


def spectrum_cross_check(params: ModelParams, max_level: int, tolerance: float = 1e-14) -> ResidualReport:
    """Compare parabolic and spherical energies level by level.

    Levels are keyed by the integer offset nu, so set equality is exact; the
    float energies are then compared as a consistency check.  Degeneracies
    are reported with a ``mismatch`` flag and never affect ``passed``.
    """
    if int(max_level) != max_level or max_level < 0:
        raise DomainError("max_level must be a non-negative integer")
    rows = []
    gaps = []
    for nu in range(int(max_level) + 1):
        par = enumerate_level(params, "parabolic", nu)
        sph = enumerate_level(params, "spherical", nu)
        e_par = [energy(params, principal_number(params, s)) for s in par.states]
        e_sph = [energy(params, principal_number(params, s)) for s in sph.states]
        ref = level_energy(params, nu)
        gaps.extend(abs(e - ref) / abs(ref) for e in e_par + e_sph)
        rows.append(
            {
                "nu": nu,
                "N": n_min(params) + nu,
                "energy": ref,
                "parabolic": par.degeneracy,
                "spherical": sph.degeneracy,
                "mismatch": par.degeneracy != sph.degeneracy,
            }
        )
    return ResidualReport.from_residuals(
        "spectrum_cross_check", gaps, tolerance, degeneracy=rows, max_level=int(max_level)
    )


__all__ = [
    "BASE_ORDER",
    "OracleConfig",
    "PoleResult",
    "QuadratureGrid",
    "ResidualReport",
    "default_step",
    "green_residue",
    "hamiltonian_residual",
    "hille_hardy_identity",
    "hille_hardy_sides",
    "jacobi_grid",
    "laguerre_grid",
    "laplacian",
    "measure_factorization_error",
    "orthonormality_check",
    "overlap",
    "params_digest",
    "pole_radii",
    "pole_scan",
    "pole_scan_report",
    "radial_oracle",
    "radial_oracle_report",
    "sample_points",
    "spectrum_cross_check",
]
