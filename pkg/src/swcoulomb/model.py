"""Model parameters and the potential V = -gamma/r + sum_i beta_i / (x^(i))^2.

Each barrier strength enters the solution only through the exponent p_i,
the root of p (p - 1) = 2 M beta_i / hbar^2.  For beta_i > 0 only the
larger root gives normalisable states; for beta_i = 0 both roots (0 and 1)
are legitimate and select the even/odd sector in x^(i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .coords import (
    CartesianPoint,
    ParabolicPoint,
    SphericalPoint,
    check_dimension,
)
from .errors import DomainError, SingularPointError

PLUS = "+"
MINUS = "-"
AUTO = "auto"
_BRANCH_ALIASES = {"+": PLUS, "plus": PLUS, "-": MINUS, "minus": MINUS, "auto": AUTO, "": AUTO}


@dataclass(frozen=True)
class ExponentSet:
    p: tuple


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs of the model.

    Parameters
    ----------
    n : int
        Space dimension, n >= 3.
    gamma : float
        Coulomb strength, > 0.
    beta : tuple of float
        The n-1 barrier strengths, each >= 0.
    hbar, mass : float
        Natural units (1, 1) by default.
    branch : tuple of str
        Per-axis root choice for p_i: ``"+"``, ``"-"`` or ``"auto"``.
        ``auto`` picks p = 0 when beta_i = 0 and the plus root otherwise.
        ``"-"`` with beta_i > 0 is rejected.
    """

    n: int
    gamma: float
    beta: tuple
    hbar: float = 1.0
    mass: float = 1.0
    branch: tuple = field(default=None)

    def __post_init__(self):
        n = check_dimension(self.n)
        object.__setattr__(self, "n", n)
        beta = tuple(float(b) for b in self.beta)
        if len(beta) != n - 1:
            raise DomainError(f"beta needs n-1 = {n - 1} entries, got {len(beta)}")
        if any(not b >= 0 for b in beta):
            raise DomainError(f"beta entries must be non-negative, got {beta}")
        object.__setattr__(self, "beta", beta)
        if not self.gamma > 0:
            raise DomainError(f"gamma must be positive, got {self.gamma!r}")
        if not (self.hbar > 0 and self.mass > 0):
            raise DomainError("hbar and mass must be positive")
        branch = self.branch
        if branch is None:
            branch = (AUTO,) * (n - 1)
        try:
            branch = tuple(_BRANCH_ALIASES[str(b).strip().lower()] for b in branch)
        except KeyError as exc:
            raise DomainError(f"unknown branch flag {exc.args[0]!r}") from None
        if len(branch) != n - 1:
            raise DomainError(f"branch needs n-1 = {n - 1} entries, got {len(branch)}")
        for b, flag in zip(beta, branch):
            if b > 0 and flag == MINUS:
                raise DomainError("minus branch with beta > 0 gives non-normalisable states")
        object.__setattr__(self, "branch", branch)

    @property
    def a(self) -> float:
        """Length scale hbar^2 / (M gamma)."""
        return self.hbar**2 / (self.mass * self.gamma)

    @property
    def p(self) -> tuple:
        return exponents(self).p

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": self.gamma,
            "beta": list(self.beta),
            "hbar": self.hbar,
            "mass": self.mass,
            "branch": list(self.branch),
            "p": list(self.p),
        }


def exponents(params: ModelParams) -> ExponentSet:
    """p_i = 1/2 + sqrt(1/4 + 2 M beta_i / hbar^2), or 0 on the minus branch at beta_i = 0."""
    scale = 2.0 * params.mass / params.hbar**2
    out = []
    for b, flag in zip(params.beta, params.branch):
        if b == 0.0 and flag in (MINUS, AUTO):
            out.append(0.0)
        else:
            out.append(0.5 + math.sqrt(0.25 + scale * b))
    return ExponentSet(tuple(out))


def _barrier_coeffs(params):
    # hbar^2/2M * p(p-1) == beta for every axis (exact for the beta=0 branches)
    return np.asarray(params.beta, dtype=float)


def potential_cartesian_array(params: ModelParams, x) -> np.ndarray:
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if x.shape[1] != params.n:
        raise DomainError(f"points have dimension {x.shape[1]}, expected {params.n}")
    r = np.sqrt(np.sum(x * x, axis=1))
    if np.any(r == 0.0):
        raise SingularPointError("potential is singular at the origin")
    beta = _barrier_coeffs(params)
    xb = x[:, : params.n - 1]
    active = beta > 0
    if np.any(xb[:, active] == 0.0):
        raise SingularPointError("point lies on a barrier hyperplane x^(i) = 0")
    barrier = np.sum(np.where(active, beta / np.where(active, xb, 1.0) ** 2, 0.0), axis=1)
    return -params.gamma / r + barrier


def potential_cartesian(params: ModelParams, c: CartesianPoint) -> float:
    """V = -gamma/r + sum_i beta_i / (x^(i))^2."""
    return float(potential_cartesian_array(params, [c.x])[0])


def potential_parabolic(params: ModelParams, p: ParabolicPoint) -> float:
    """Potential written in parabolic rotational coordinates."""
    n = params.n
    if p.n != n:
        raise DomainError(f"point has dimension {p.n}, expected {n}")
    if not (p.xi > 0 and p.eta > 0):
        raise SingularPointError("parabolic potential needs xi * eta > 0")
    pe = params.p
    k = n - 2
    th = p.theta
    # innermost bracket: p1 on cos, p2 on sin of theta^(n-2)
    inner = pe[0] * (pe[0] - 1) / math.cos(th[k - 1]) ** 2 + pe[1] * (pe[1] - 1) / math.sin(th[k - 1]) ** 2
    # outward: theta^(i) carries p_{n-i} on sin and wraps the rest in 1/cos^2
    for i in range(k - 1, 0, -1):
        t = th[i - 1]
        pi_ = pe[n - i - 1]
        inner = inner / math.cos(t) ** 2 + pi_ * (pi_ - 1) / math.sin(t) ** 2
    s2 = p.xi**2 + p.eta**2
    hm = params.hbar**2 / (2.0 * params.mass)
    return -2.0 * params.gamma / s2 + hm * inner / (p.xi * p.eta) ** 2


def potential_spherical(params: ModelParams, s: SphericalPoint) -> float:
    """Potential written in spherical coordinates."""
    n = params.n
    if s.n != n:
        raise DomainError(f"point has dimension {s.n}, expected {n}")
    if not s.r > 0:
        raise SingularPointError("spherical potential is singular at r = 0")
    pe = params.p
    th = s.theta
    inner = pe[n - 2] * (pe[n - 2] - 1) / math.cos(th[n - 2]) ** 2
    for k in range(n - 3, -1, -1):
        inner = pe[k] * (pe[k] - 1) / math.cos(th[k]) ** 2 + inner / math.sin(th[k]) ** 2
    hm = params.hbar**2 / (2.0 * params.mass)
    return -params.gamma / s.r + hm * inner / s.r**2
