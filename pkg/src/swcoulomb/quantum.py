"""Quantum-number bookkeeping for the parabolic and spherical labelings.

Both labelings share the ground value N_min = sum(p) + (n-1)/2 of the
principal quantum number; a level is identified by the integer offset
nu = N - N_min so that grouping never keys on floats.

    parabolic:  nu = N1 + N2 + 2 * sum(J),   J has n-2 entries
    spherical:  nu = Nr + 2 * sum(J),        J has n-1 entries
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import DomainError
from .model import ModelParams

System = Literal["parabolic", "spherical"]
SYSTEMS = ("parabolic", "spherical")


def _nonneg_int(v, name):
    if int(v) != v or v < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {v!r}")
    return int(v)


@dataclass(frozen=True)
class ParabolicState:
    N1: int
    N2: int
    J: tuple

    def __post_init__(self):
        object.__setattr__(self, "N1", _nonneg_int(self.N1, "N1"))
        object.__setattr__(self, "N2", _nonneg_int(self.N2, "N2"))
        object.__setattr__(self, "J", tuple(_nonneg_int(j, "J") for j in self.J))

    @property
    def nu(self) -> int:
        return self.N1 + self.N2 + 2 * sum(self.J)

    def labels(self) -> tuple:
        return (self.N1, self.N2) + self.J


@dataclass(frozen=True)
class SphericalState:
    Nr: int
    J: tuple

    def __post_init__(self):
        object.__setattr__(self, "Nr", _nonneg_int(self.Nr, "Nr"))
        object.__setattr__(self, "J", tuple(_nonneg_int(j, "J") for j in self.J))

    @property
    def nu(self) -> int:
        return self.Nr + 2 * sum(self.J)

    def labels(self) -> tuple:
        return (self.Nr,) + self.J


State = Union[ParabolicState, SphericalState]


@dataclass(frozen=True)
class EnergyLevel:
    nu: int
    N: float
    energy: float
    states: tuple

    @property
    def degeneracy(self) -> int:
        return len(self.states)


def check_system(system: str) -> str:
    if system not in SYSTEMS:
        raise DomainError(f"system must be one of {SYSTEMS}, got {system!r}")
    return system


def system_of(state: State) -> str:
    return "parabolic" if isinstance(state, ParabolicState) else "spherical"


def validate_state(params: ModelParams, state: State) -> State:
    want = params.n - 2 if isinstance(state, ParabolicState) else params.n - 1
    if len(state.J) != want:
        raise DomainError(
            f"{system_of(state)} state for n={params.n} needs {want} J labels, got {len(state.J)}"
        )
    return state


def make_state(params: ModelParams, system: str, labels) -> State:
    """Build a state from a flat label list: (N1, N2, J...) or (Nr, J...)."""
    labels = tuple(labels)
    if check_system(system) == "parabolic":
        if len(labels) < 2:
            raise DomainError("parabolic labels are N1, N2, J1..J(n-2)")
        s = ParabolicState(labels[0], labels[1], labels[2:])
    else:
        if len(labels) < 1:
            raise DomainError("spherical labels are Nr, J1..J(n-1)")
        s = SphericalState(labels[0], labels[1:])
    return validate_state(params, s)


def sigma(params: ModelParams, s: ParabolicState) -> float:
    """sigma = sum_{i<=n-1} p_i + 2 sum_{i<=n-2} J_i."""
    validate_state(params, s)
    return sum(params.p) + 2 * sum(s.J)


def m_chain_parabolic(params: ModelParams, s: ParabolicState) -> list:
    """Return [m_0, ..., m_{n-2}].

    m_0 = p_1 - 1/2 and m_l = sum_{i<=l+1} p_i + 2 sum_{i<=l} J_i + (l-1)/2.
    """
    validate_state(params, s)
    p = params.p
    out = [p[0] - 0.5]
    for l in range(1, params.n - 1):
        out.append(sum(p[: l + 1]) + 2 * sum(s.J[:l]) + 0.5 * (l - 1))
    return out


def m_chain_spherical(params: ModelParams, s: SphericalState) -> list:
    """Return [m_1, ..., m_n] with m_n = -1/2 and
    m_k = sum_{i>=k} p_i + 2 sum_{i>=k} J_i + (n-k-1)/2."""
    validate_state(params, s)
    n = params.n
    p = params.p
    out = []
    for k in range(1, n):
        out.append(sum(p[k - 1 :]) + 2 * sum(s.J[k - 1 :]) + 0.5 * (n - k - 1))
    out.append(-0.5)
    return out


def n_min(params: ModelParams) -> float:
    return sum(params.p) + 0.5 * (params.n - 1)


def principal_number(params: ModelParams, state: State) -> float:
    if isinstance(state, ParabolicState):
        return state.N1 + state.N2 + sigma(params, state) + 0.5 * (params.n - 1)
    m1 = m_chain_spherical(params, state)[0]
    return state.Nr + m1 + 0.5


def energy(params: ModelParams, N: float) -> float:
    """E = -M gamma^2 / (2 hbar^2 N^2)."""
    if not N > 0:
        raise DomainError(f"principal quantum number must be positive, got {N!r}")
    return -params.mass * params.gamma**2 / (2.0 * params.hbar**2 * N * N)


def level_energy(params: ModelParams, nu: int) -> float:
    return energy(params, n_min(params) + nu)


def _j_tuples(count, budget):
    # all J tuples of given length with 2*sum(J) <= budget
    top = budget // 2
    for js in itertools.product(range(top + 1), repeat=count):
        if 2 * sum(js) <= budget:
            yield js


def enumerate_level(params: ModelParams, system: str, level_index: int) -> EnergyLevel:
    """Every state of ``system`` whose offset nu equals ``level_index``."""
    nu = _nonneg_int(level_index, "level_index")
    check_system(system)
    states = []
    if system == "parabolic":
        for js in _j_tuples(params.n - 2, nu):
            rest = nu - 2 * sum(js)
            for n1 in range(rest, -1, -1):
                states.append(ParabolicState(n1, rest - n1, js))
    else:
        for js in _j_tuples(params.n - 1, nu):
            states.append(SphericalState(nu - 2 * sum(js), js))
    N = n_min(params) + nu
    return EnergyLevel(nu=nu, N=N, energy=energy(params, N), states=tuple(states))


def enumerate_states(params: ModelParams, system: str, max_level: int) -> list:
    out = []
    for nu in range(_nonneg_int(max_level, "max_level") + 1):
        out.extend(enumerate_level(params, system, nu).states)
    return out


def degeneracy_series(params: ModelParams, system: str, max_level: int) -> list:
    """Level counts from the generating function, as [(nu, count), ...].

    parabolic: 1/(1-x)^2 * 1/(1-x^2)^(n-2);  spherical: 1/(1-x) * 1/(1-x^2)^(n-1).
    """
    K = _nonneg_int(max_level, "max_level")
    check_system(system)
    ones = np.ones(K + 1, dtype=np.int64)
    even = np.zeros(K + 1, dtype=np.int64)
    even[::2] = 1
    n_lin, n_quad = (2, params.n - 2) if system == "parabolic" else (1, params.n - 1)
    series = np.zeros(K + 1, dtype=np.int64)
    series[0] = 1
    for factor in [ones] * n_lin + [even] * n_quad:
        series = np.convolve(series, factor)[: K + 1]
    return [(nu, int(c)) for nu, c in enumerate(series)]
