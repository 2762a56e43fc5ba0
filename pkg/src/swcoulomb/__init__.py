"""Exact bound states of V = -gamma/r + sum_i beta_i / (x^(i))^2 in n dimensions.

Modules
-------
specfun   special functions (Jacobi, Laguerre, Kummer, Whittaker, Bessel)
coords    parabolic rotational and spherical charts, metrics
model     parameters, barrier exponents, the potential in each chart
quantum   quantum numbers, energies, level enumeration
wavefn    normalised wavefunctions and the radial Green's function
verify    independent numerical checks
cli       command-line front end
"""

from .errors import (
    BoxTooSmallError,
    BracketError,
    ConvergenceError,
    DomainError,
    PoleError,
    QuadratureError,
    SingularPointError,
    SWCoulombError,
)
from .model import ModelParams, exponents
from .quantum import ParabolicState, SphericalState, energy, enumerate_level, principal_number
from .wavefn import green_radial, psi_parabolic, psi_spherical

__version__ = "0.1.0"

__all__ = [
    "BoxTooSmallError",
    "BracketError",
    "ConvergenceError",
    "DomainError",
    "ModelParams",
    "ParabolicState",
    "PoleError",
    "QuadratureError",
    "SWCoulombError",
    "SingularPointError",
    "SphericalState",
    "energy",
    "enumerate_level",
    "exponents",
    "green_radial",
    "principal_number",
    "psi_parabolic",
    "psi_spherical",
]
