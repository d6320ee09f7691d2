"""EWL circuit evaluation: entangle, play, unentangle, score.

The protocol: both qubits start in |0>, an entangling gate J(gamma) is
applied, each player applies a single-qubit strategy rotation U(theta,
phi, alpha), J is undone, and the four outcome probabilities are dotted
with per-player payoff vectors.

J(gamma) = cos(gamma/2) I + i sin(gamma/2) (sigma_x (x) sigma_x), the
exponential form: identity at gamma=0, a Bell-state maker at gamma=pi/2.
With this form a one-sided i*sigma_x move commutes through J, so the
strategy pair classes {U(0,0,0), U(pi,0,pi/2)} reproduce the classical
game's cells at every entanglement level.

Outcome |0> is read as confess/cooperate, |1> as defect; payoff vectors
are indexed in the basis order (00, 01, 10, 11).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import KET_00, dagger, kron, require_complex

TWO_PI = 2.0 * math.pi


def _require_range(name: str, value: float, low: float, high: float) -> None:
    if not (math.isfinite(value) and low <= value <= high):
        raise ValueError(f"{name} must be in [{low:g}, {high:g}], got {value!r}")


@dataclass(frozen=True)
class StrategyParams:
    """Strategy rotation angles: theta in [0,pi], phi and alpha in [0,2pi]."""

    theta: float
    phi: float
    alpha: float

    def __post_init__(self) -> None:
        _require_range("theta", self.theta, 0.0, math.pi)
        _require_range("phi", self.phi, 0.0, TWO_PI)
        _require_range("alpha", self.alpha, 0.0, TWO_PI)

    def astuple(self) -> tuple[float, float, float]:
        return (self.theta, self.phi, self.alpha)


@dataclass(frozen=True)
class EntanglementParam:
    """Entangler angle gamma in [0, pi/2]; pi/2 is maximal entanglement."""

    gamma: float

    def __post_init__(self) -> None:
        _require_range("gamma", self.gamma, 0.0, math.pi / 2)


@dataclass(frozen=True)
class GameDefinition:
    """A named bimatrix game: four payoffs per player in (00,01,10,11) order."""

    name: str
    payoff_a: tuple[float, float, float, float]
    payoff_b: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        for tag, vec in (("payoff_a", self.payoff_a), ("payoff_b", self.payoff_b)):
            vec = tuple(float(x) for x in vec)
            if len(vec) != 4:
                raise ValueError(f"{self.name}: {tag} needs exactly 4 entries, got {len(vec)}")
            if not all(math.isfinite(x) for x in vec):
                raise ValueError(f"{self.name}: {tag} has a non-finite entry")
            object.__setattr__(self, tag, vec)


# The classical embedding pair: identity keeps |0> (confess), and
# U(pi,0,pi/2) = i*sigma_x flips to |1> (defect) transparently to J.
IDENTITY_STRATEGY = StrategyParams(0.0, 0.0, 0.0)
DEFECT_STRATEGY = StrategyParams(math.pi, 0.0, math.pi / 2)


def entangler(gamma: EntanglementParam) -> np.ndarray:
    """4x4 entangling gate: cos(g/2) diagonal, i*sin(g/2) anti-diagonal."""
    c = math.cos(gamma.gamma / 2.0)
    s = math.sin(gamma.gamma / 2.0)
    j = np.zeros((4, 4), dtype=np.complex128)
    np.fill_diagonal(j, c)
    for k in range(4):
        j[k, 3 - k] = 1j * s
    return j


def strategy_matrix(p: StrategyParams) -> np.ndarray:
    """2x2 strategy rotation for parameters (theta, phi, alpha).

    [[exp(-i phi) cos(t/2),  exp(i alpha) sin(t/2)],
     [-exp(-i alpha) sin(t/2), exp(i phi) cos(t/2)]]
    """
    c = math.cos(p.theta / 2.0)
    s = math.sin(p.theta / 2.0)
    return np.array(
        [
            [np.exp(-1j * p.phi) * c, np.exp(1j * p.alpha) * s],
            [-np.exp(-1j * p.alpha) * s, np.exp(1j * p.phi) * c],
        ],
        dtype=np.complex128,
    )


def final_state_from_matrices(gamma: EntanglementParam, u_a, u_b) -> np.ndarray:
    """Final circuit state J† (u_a (x) u_b) J |00> by explicit 4x4 products.

    This naive path is the reference the vectorized payoff kernel is
    checked against.
    """
    u_a = require_complex(u_a, (2, 2))
    u_b = require_complex(u_b, (2, 2))
    j = entangler(gamma)
    return dagger(j) @ (kron(u_a, u_b) @ (j @ KET_00))


def final_state(gamma: EntanglementParam, a: StrategyParams, b: StrategyParams) -> np.ndarray:
    """Final circuit state for two parameterized strategies."""
    return final_state_from_matrices(gamma, strategy_matrix(a), strategy_matrix(b))


def outcome_probs(state) -> np.ndarray:
    """Squared amplitudes per outcome, in (00, 01, 10, 11) order."""
    state = require_complex(state, (4,))
    return np.abs(state) ** 2


def expected_payoffs(probs, game: GameDefinition) -> tuple[float, float]:
    """Dot the outcome distribution with each player's payoff vector."""
    probs = np.asarray(probs, dtype=np.float64)
    return (
        float(probs @ np.asarray(game.payoff_a)),
        float(probs @ np.asarray(game.payoff_b)),
    )
