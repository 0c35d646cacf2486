"""Concurrence and fidelity for pure two-qubit states, plus closed forms.

For a pure state a|uu> + b|ud> + c|du> + d|dd> the concurrence is
2 |a d - b c|.  The closed forms below follow the evolved cluster:

* `concurrence_stationary`: central pair evolving from a product state
  while the side pair is frozen in a z ket.
* `concurrence_xy`: same, for both central spins initially in the xy
  plane; only the relative azimuth dphi enters.
* `concurrence_xi`: the conditional central state after finding the
  side pair in one up and one down (z measurement of the +x-evolved
  cluster); equals |sin((Jz - J) t / 2)|.
* `concurrence_psi3`: the -- branch of a side measurement along the
  Bell direction (theta = pi/2, phi = h t - pi).
* `bell_fidelity_curves`: overlap-squared of the three conditional
  branches with their Bell targets under the Bell direction; the middle
  curve counts both mixed outcomes together, so F1 + F2 + F3 = 1.
"""

from __future__ import annotations

from math import cos, sin, sqrt

import numpy as np

from .evolution import InitialProductState
from .hamiltonian import ClusterParams

__all__ = [
    "concurrence_pure",
    "fidelity",
    "concurrence_stationary",
    "concurrence_xy",
    "concurrence_xi",
    "concurrence_psi3",
    "bell_fidelity_curves",
]


def concurrence_pure(state: np.ndarray) -> float:
    """Concurrence 2|ad - bc| of a normalized pure two-qubit state."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (4,):
        raise ValueError(f"expected a 4-component pair state, got {state.shape}")
    return float(2.0 * abs(state[0] * state[3] - state[1] * state[2]))


def fidelity(state: np.ndarray, target: np.ndarray) -> float:
    """|<target|state>|^2 for normalized pure states of equal dimension."""
    state = np.asarray(state)
    target = np.asarray(target)
    if state.shape != target.shape:
        raise ValueError(f"dimension mismatch: {state.shape} vs {target.shape}")
    return float(abs(np.vdot(target, state)) ** 2)


def concurrence_stationary(p: ClusterParams, init: InitialProductState,
                           t: float) -> float:
    """Concurrence of the central pair evolved from a product state.

    Closed form in the initial amplitudes:

        C = 2 | C1 C2 C3 C4 (1 - e^{i Jz t} cos Jt)
              + (i/2) e^{i Jz t} (C1^2 C4^2 + C2^2 C3^2) sin Jt |

    Independent of hp, J0 and of the frozen side ket: those only move
    the relative phase between the uu and dd amplitudes, which cancels
    in the combination a d.
    """
    phase = np.exp(1j * p.Jz * t)
    c1, c2, c3, c4 = init.c1, init.c2, init.c3, init.c4
    value = (c1 * c2 * c3 * c4 * (1.0 - phase * np.cos(p.J * t))
             + 0.5j * phase * (c1 ** 2 * c4 ** 2 + c2 ** 2 * c3 ** 2) * np.sin(p.J * t))
    return float(2.0 * abs(value))


def concurrence_xy(J: float, Jz: float, dphi: float, t: float) -> float:
    """Concurrence for both central spins prepared in the xy plane.

    With C1 = C3 = 1/sqrt2 and relative azimuth dphi between the two
    spins:

        C = 1/2 sqrt((cos Jz t - cos J t)^2
                     + (sin Jz t - sin J t cos dphi)^2)

    Maximal (C = 1) when (Jz -+ J) t = pi at dphi = 0 resp. pi.
    """
    return 0.5 * sqrt((cos(Jz * t) - cos(J * t)) ** 2
                      + (sin(Jz * t) - sin(J * t) * cos(dphi)) ** 2)


def concurrence_xi(J: float, Jz: float, t: float) -> float:
    """Concurrence |sin((Jz - J) t / 2)| of the mixed-outcome conditional
    state after a z measurement of the side pair on the +x-evolved cluster."""
    return abs(sin(0.5 * (Jz - J) * t))


def concurrence_psi3(J: float, Jz: float, J0: float, t: float) -> float:
    """Concurrence of the -- branch under the Bell direction.

    With q = cos^4(J0 t / 2):

        C = sqrt(1 + q^2 - 2 q cos((Jz - J) t)) / (1 + q)

    Reaches 1 at J0 t = pi (q = 0) and approaches 1 faster the larger
    (Jz - J) / J0.
    """
    q = cos(0.5 * J0 * t) ** 4
    return sqrt(max(0.0, 1.0 + q * q - 2.0 * q * cos((Jz - J) * t))) / (1.0 + q)


def bell_fidelity_curves(J0: float, t: float) -> tuple[float, float, float]:
    """Born weights of the three side-measurement branches under the Bell
    direction, as functions of J0 t only:

        F1 = 1/2 sin^4(J0 t / 2)        (++ outcome)
        F2 = 1/4 sin^2(J0 t)            (+- and -+ outcomes together)
        F3 = 1/2 (cos^4(J0 t / 2) + 1)  (-- outcome)

    F1 + F2 + F3 = 1 for every J0 t.
    """
    half = 0.5 * J0 * t
    f1 = 0.5 * sin(half) ** 4
    f2 = 0.25 * sin(J0 * t) ** 2
    f3 = 0.5 * (cos(half) ** 4 + 1.0)
    return f1, f2, f3
