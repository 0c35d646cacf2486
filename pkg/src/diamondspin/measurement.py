"""Projective pair measurements along an arbitrary direction.

A direction (theta, phi) on the Bloch sphere defines the single-spin
basis

    |+> =  cos(theta/2) |u> + sin(theta/2) e^{+i phi} |d>
    |-> = -sin(theta/2) e^{-i phi} |u> + cos(theta/2) |d>

Measuring one pair of the cluster in this basis leaves the other pair
in one of four conditional states.  `measure_pair` computes all four
branches numerically for any cluster state; `side_branch_states` and
`side_branch_amplitudes` give the closed forms for the evolved +x
product state when the side pair is measured (outcomes ++, +- / -+
and --; the two mixed outcomes are equivalent by symmetry).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import cos, pi, sin, sqrt

import numpy as np

from .hamiltonian import ClusterParams
from .hilbert import DIM_PAIR, require_normalized

__all__ = [
    "MeasurementDirection",
    "Pair",
    "PairOutcome",
    "OUTCOMES",
    "MeasurementRecord",
    "UnreachableOutcomeError",
    "direction_basis",
    "pair_basis_change",
    "measure_pair",
    "sample_measurement",
    "side_branch_states",
    "side_branch_amplitudes",
]

UNREACHABLE_PROBABILITY = 1e-12


class UnreachableOutcomeError(RuntimeError):
    """Raised when the post state of a zero-probability branch is consumed."""


@dataclass(frozen=True)
class MeasurementDirection:
    """Measurement axis; angles are canonicalized to theta in [0, pi],
    phi in [0, 2 pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        theta, phi = self.theta, self.phi
        if not (np.isfinite(theta) and np.isfinite(phi)):
            raise ValueError("direction angles must be finite")
        if not 0.0 <= theta <= pi:
            # Recover the polar angle from the unit vector so that e.g.
            # (-theta, phi) maps to (theta, phi + pi).
            x = sin(theta) * cos(phi)
            y = sin(theta) * sin(phi)
            theta = float(np.arccos(np.clip(cos(theta), -1.0, 1.0)))
            phi = float(np.arctan2(y, x)) if sin(theta) > 1e-15 else 0.0
        if not 0.0 <= phi < 2.0 * pi:
            phi = phi % (2.0 * pi)
            if phi >= 2.0 * pi:  # a tiny negative can round up to the period
                phi = 0.0
        object.__setattr__(self, "theta", float(theta))
        object.__setattr__(self, "phi", float(phi))


class Pair(Enum):
    """Which pair of the cluster gets measured."""

    SIDES = "sides"
    CENTRALS = "centrals"


class PairOutcome(Enum):
    """Joint outcome of the two single-spin measurements."""

    PLUS_PLUS = "++"
    PLUS_MINUS = "+-"
    MINUS_PLUS = "-+"
    MINUS_MINUS = "--"

    @property
    def first(self) -> str:
        return self.value[0]

    @property
    def second(self) -> str:
        return self.value[1]


OUTCOMES = (PairOutcome.PLUS_PLUS, PairOutcome.PLUS_MINUS,
            PairOutcome.MINUS_PLUS, PairOutcome.MINUS_MINUS)


class MeasurementRecord:
    """One measurement branch: outcome, Born probability, post state.

    The post state of an outcome with probability below 1e-12 is not
    defined; such records are flagged unreachable and consuming their
    `post_state` raises `UnreachableOutcomeError`.
    """

    __slots__ = ("outcome", "probability", "_post")

    def __init__(self, outcome: PairOutcome, probability: float,
                 post: np.ndarray | None):
        self.outcome = outcome
        self.probability = float(probability)
        self._post = post

    @property
    def reachable(self) -> bool:
        return self._post is not None

    @property
    def post_state(self) -> np.ndarray:
        if self._post is None:
            raise UnreachableOutcomeError(
                f"outcome {self.outcome.value} has probability "
                f"{self.probability:.3e}; its post state is undefined")
        return self._post

    def __repr__(self):
        return (f"MeasurementRecord(outcome={self.outcome.value!r}, "
                f"probability={self.probability:.6g}, reachable={self.reachable})")


def direction_basis(d: MeasurementDirection) -> tuple[np.ndarray, np.ndarray]:
    """The orthonormal single-spin kets (|+>, |->) for the direction."""
    c, s = cos(d.theta / 2.0), sin(d.theta / 2.0)
    phase = np.exp(1j * d.phi)
    plus = np.array([c, s * phase], dtype=complex)
    minus = np.array([-s / phase, c], dtype=complex)
    return plus, minus


@lru_cache(maxsize=256)
def _pair_rotation_cached(theta: float, phi: float) -> np.ndarray:
    b = np.column_stack(direction_basis(MeasurementDirection(theta, phi)))
    rotation = np.kron(b, b)
    rotation.flags.writeable = False
    return rotation


def _pair_rotation(d: MeasurementDirection) -> np.ndarray:
    """Unitary whose columns are |++>, |+->, |-+>, |--> in the z basis."""
    return _pair_rotation_cached(d.theta, d.phi)


def pair_basis_change(state: np.ndarray, d: MeasurementDirection) -> np.ndarray:
    """Coefficients of a two-spin state in the (|++>, |+->, |-+>, |-->) basis."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (DIM_PAIR,):
        raise ValueError(f"expected a 4-component pair state, got {state.shape}")
    return _pair_rotation(d).conj().T @ state


def measure_pair(psi: np.ndarray, pair: Pair | str,
                 d: MeasurementDirection) -> tuple[MeasurementRecord, ...]:
    """All four branches of a projective pair measurement.

    Returns records in the outcome order (++, +-, -+, --).  The branch
    probabilities add to one; each reachable post state keeps the phase
    inherited from the projection, so summing outcome kets times
    sqrt(probability) times post states rebuilds psi exactly.
    """
    pair = Pair(pair)
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (16,):
        raise ValueError(f"expected a 16-component cluster state, got {psi.shape}")
    require_normalized(psi, what="cluster state")

    rotation = _pair_rotation(d)
    matrix = psi.reshape(4, 4)  # [side index, central index]
    if pair is Pair.SIDES:
        branches = rotation.conj().T @ matrix          # rows: outcome on sides
    else:
        branches = (rotation.conj().T @ matrix.T)      # rows: outcome on centrals

    records = []
    for outcome, unnormalized in zip(OUTCOMES, branches):
        probability = float(np.real(np.vdot(unnormalized, unnormalized)))
        if probability < UNREACHABLE_PROBABILITY:
            records.append(MeasurementRecord(outcome, probability, None))
        else:
            records.append(MeasurementRecord(outcome, probability,
                                             unnormalized / sqrt(probability)))
    return tuple(records)


def sample_measurement(psi: np.ndarray, pair: Pair | str, d: MeasurementDirection,
                       seed: int) -> MeasurementRecord:
    """Draw one branch from the Born distribution; same seed, same outcome."""
    records = measure_pair(psi, pair, d)
    probabilities = np.array([max(r.probability, 0.0) for r in records])
    edges = np.cumsum(probabilities / probabilities.sum())
    draw = np.random.default_rng(seed).random()
    index = min(int(np.searchsorted(edges, draw, side="right")), 3)
    return records[index]


def side_branch_amplitudes(p: ClusterParams, d: MeasurementDirection,
                           t: float) -> tuple[float, float, float]:
    """Normalization constants (A1, A2, A3) of the conditional central states.

    The Born weights of the four side outcomes on the evolved +x state
    are A1^-2/16 (++), A2^-2/16 (each of +- and -+) and A3^-2/16 (--).
    """
    st = sin(d.theta)
    ct = cos(d.theta)
    u = p.J0 * t + p.h * t - d.phi
    v = p.h * t - d.phi
    w = p.J0 * t - p.h * t + d.phi
    a1 = ((1.0 + st * cos(u)) ** 2 + 2.0 * (1.0 + st * cos(v)) ** 2
          + (1.0 + st * cos(w)) ** 2) ** -0.5
    a2 = (4.0 * ct ** 2 + st ** 2 * sin(u) ** 2 + 2.0 * st ** 2 * sin(v) ** 2
          + st ** 2 * sin(w) ** 2) ** -0.5
    a3 = ((1.0 - st * cos(u)) ** 2 + 2.0 * (1.0 - st * cos(v)) ** 2
          + (1.0 - st * cos(w)) ** 2) ** -0.5
    return float(a1), float(a2), float(a3)


def side_branch_states(p: ClusterParams, d: MeasurementDirection,
                       t: float) -> tuple[np.ndarray | None, ...]:
    """Closed-form central-pair states after measuring the sides along d.

    Returns (state after ++, state after +- or -+, state after --),
    each normalized; an unreachable branch comes back as None.  Angle
    shorthand: c = cos(theta/2), s = sin(theta/2).
    """
    c = cos(d.theta / 2.0)
    s = sin(d.theta / 2.0)
    g1 = np.exp(-1j * (0.25 * p.Jz + p.hp) * t)
    g2 = np.exp(-1j * (0.5 * p.J - 0.25 * p.Jz) * t)
    g3 = np.exp(-1j * (0.25 * p.Jz - p.hp) * t)
    up = 0.5 * (p.J0 + p.h) * t           # half the uu-branch phase rate
    um = 0.5 * (p.J0 - p.h) * t
    hh = 0.5 * p.h * t

    def quad(sign: float) -> np.ndarray:
        # Outcome sign flips the azimuth phase along with everything else.
        top = (c * np.exp(-1j * sign * up)
               + sign * s * np.exp(1j * sign * (up - d.phi))) ** 2
        mid = (c * np.exp(-1j * sign * hh)
               + sign * s * np.exp(1j * sign * (hh - d.phi))) ** 2
        bot = (c * np.exp(1j * sign * um)
               + sign * s * np.exp(-1j * sign * (um + d.phi))) ** 2
        return np.array([g1 * top, g2 * mid, g2 * mid, g3 * bot], dtype=complex)

    first = quad(+1.0)
    third = quad(-1.0)
    ct = cos(d.theta)
    st = sin(d.theta)
    second = np.array([
        g1 * (ct + 1j * st * sin((p.h + p.J0) * t - d.phi)),
        g2 * (ct + 1j * st * sin(p.h * t - d.phi)),
        g2 * (ct + 1j * st * sin(p.h * t - d.phi)),
        g3 * (ct + 1j * st * sin((p.h - p.J0) * t - d.phi)),
    ], dtype=complex)

    out = []
    for vec in (first, second, third):
        n = np.linalg.norm(vec)
        out.append(None if n < 1e-12 else vec / n)
    return tuple(out)
