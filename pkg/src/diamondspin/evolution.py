"""Unitary time evolution: numerical oracle and closed forms.

`evolve_oracle` diagonalizes the (Hermitian) Hamiltonian once per call
and applies exp(-iHt) exactly; it is the reference every analytic
expression in this package is checked against.

Two closed forms are implemented on top of it:

* `evolve_stationary_sides`: side pair frozen in a z product ket, the
  central pair precesses under the XXZ exchange with effective field
  hp + J0 (m1 + m2).  The returned four amplitudes drop the global
  phase exp(-i h m12 t) carried by the side factor.
* `evolve_xplus_decomposed`: the fully polarized +x product state,
  written either as side z kets times central-pair conditional states
  (xi1, xi2, xi3) or as central z kets times side-pair conditional
  states (phi1, phi2, phi3).  Both decompositions reassemble to the
  same 16-component vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hamiltonian import ClusterHamiltonian, ClusterParams
from .hilbert import DIM_CLUSTER, Spin, pair_ket

__all__ = [
    "InitialProductState",
    "DecomposedState",
    "xplus_state",
    "evolve_oracle",
    "evolve_stationary_sides",
    "evolve_xplus_decomposed",
    "assemble_from_central",
    "assemble_from_side",
]


@dataclass(frozen=True)
class InitialProductState:
    """Product initial condition (C1|u> + C2|d>)_a (C3|u> + C4|d>)_b with the
    side pair parked in the z product ket `side`."""

    c1: complex
    c2: complex
    c3: complex
    c4: complex
    side: tuple[Spin, Spin] = (Spin.UP, Spin.UP)

    def __post_init__(self):
        for pair, what in (((self.c1, self.c2), "(C1, C2)"),
                           ((self.c3, self.c4), "(C3, C4)")):
            n = abs(pair[0]) ** 2 + abs(pair[1]) ** 2
            if abs(n - 1.0) > 1e-9:
                raise ValueError(f"{what} is not normalized: |C|^2 = {n}")

    @property
    def side_magnetization(self) -> float:
        """m1 + m2 of the frozen side ket (+1, 0 or -1)."""
        return self.side[0].sz + self.side[1].sz

    def central_state(self) -> np.ndarray:
        """The central-pair factor at t = 0."""
        return np.array([self.c1 * self.c3, self.c1 * self.c4,
                         self.c2 * self.c3, self.c2 * self.c4], dtype=complex)

    def full_state(self) -> np.ndarray:
        """The 16-component product vector at t = 0."""
        return np.kron(pair_ket(*self.side), self.central_state())


def xplus_state() -> np.ndarray:
    """All four spins polarized along +x: every product amplitude is 1/4."""
    return np.full(DIM_CLUSTER, 0.25, dtype=complex)


def evolve_oracle(hamiltonian: np.ndarray | ClusterHamiltonian,
                  psi0: np.ndarray, t: float) -> np.ndarray:
    """Apply exp(-iHt) to psi0 via a Hermitian eigendecomposition."""
    h = hamiltonian.total if isinstance(hamiltonian, ClusterHamiltonian) else hamiltonian
    energies, vectors = np.linalg.eigh(h)
    phases = np.exp(-1j * energies * t)
    return vectors @ (phases * (vectors.conj().T @ np.asarray(psi0, dtype=complex)))


def evolve_stationary_sides(p: ClusterParams, init: InitialProductState,
                            t: float) -> np.ndarray:
    """Central-pair state at time t for a frozen side z ket.

    Amplitudes on (|uu>, |ud>, |du>, |dd>), with heff = hp + J0 (m1 + m2):

        a = C1 C3 exp(-i (Jz/4 + heff) t)
        b = exp(+i Jz t/4) [C1 C4 cos(Jt/2) - i C2 C3 sin(Jt/2)]
        c = exp(+i Jz t/4) [C2 C3 cos(Jt/2) - i C1 C4 sin(Jt/2)]
        d = C2 C4 exp(-i (Jz/4 - heff) t)

    The overall phase exp(-i h m12 t) of the side factor is dropped.
    """
    heff = p.hp + p.J0 * init.side_magnetization
    half = 0.5 * p.J * t
    quarter = 0.25 * p.Jz * t
    a = init.c1 * init.c3 * np.exp(-1j * (quarter + heff * t))
    d = init.c2 * init.c4 * np.exp(-1j * (quarter - heff * t))
    b = np.exp(1j * quarter) * (init.c1 * init.c4 * np.cos(half)
                                - 1j * init.c2 * init.c3 * np.sin(half))
    c = np.exp(1j * quarter) * (init.c2 * init.c3 * np.cos(half)
                                - 1j * init.c1 * init.c4 * np.sin(half))
    return np.array([a, b, c, d], dtype=complex)


@dataclass(frozen=True)
class DecomposedState:
    """Evolved +x product state in its two conditional decompositions.

    xi1/xi2/xi3: central-pair states conditioned on the side pair being
    found in |uu>, (|ud> or |du>), |dd>.  phi1/phi2/phi3: side-pair
    states conditioned on the central pair, same ordering.  All six are
    normalized; the full vector is 1/2 (|uu> xi1 + |ud> xi2 + |du> xi2
    + |dd> xi3) and equally 1/2 (phi1 |uu> + phi2 |ud> + phi2 |du>
    + phi3 |dd>).
    """

    xi1: np.ndarray
    xi2: np.ndarray
    xi3: np.ndarray
    phi1: np.ndarray
    phi2: np.ndarray
    phi3: np.ndarray
    time: float = field(default=0.0)


def _phase_row(*frequencies: float) -> np.ndarray:
    return 0.5 * np.exp(-1j * np.asarray(frequencies))


def evolve_xplus_decomposed(p: ClusterParams, t: float) -> DecomposedState:
    """Closed-form conditional states of the evolved +x product state.

    Every component is a pure phase of modulus 1/2, so each conditional
    state is normalized and every side (or central) z outcome has Born
    weight 1/4.
    """
    jz4 = 0.25 * p.Jz * t
    mid = (0.5 * p.J - 0.25 * p.Jz) * t
    j0 = p.J0 * t
    h = p.h * t
    hp = p.hp * t

    xi1 = _phase_row(jz4 + j0 + h + hp, mid + h, mid + h, jz4 - j0 + h - hp)
    xi2 = _phase_row(jz4 + hp, mid, mid, jz4 - hp)
    xi3 = _phase_row(jz4 - j0 - h + hp, mid - h, mid - h, jz4 + j0 - h - hp)

    phi1 = _phase_row(jz4 + j0 + h + hp, jz4 + hp, jz4 + hp, jz4 - j0 - h + hp)
    phi2 = _phase_row(mid + h, mid, mid, mid - h)
    phi3 = _phase_row(jz4 - j0 + h - hp, jz4 - hp, jz4 - hp, jz4 + j0 - h - hp)

    return DecomposedState(xi1=xi1, xi2=xi2, xi3=xi3,
                           phi1=phi1, phi2=phi2, phi3=phi3, time=t)


def assemble_from_central(d: DecomposedState) -> np.ndarray:
    """Rebuild the 16-vector from the central-pair conditional states."""
    out = np.zeros(DIM_CLUSTER, dtype=complex)
    for side, xi in ((pair_ket(Spin.UP, Spin.UP), d.xi1),
                     (pair_ket(Spin.UP, Spin.DOWN), d.xi2),
                     (pair_ket(Spin.DOWN, Spin.UP), d.xi2),
                     (pair_ket(Spin.DOWN, Spin.DOWN), d.xi3)):
        out += 0.5 * np.kron(side, xi)
    return out


def assemble_from_side(d: DecomposedState) -> np.ndarray:
    """Rebuild the 16-vector from the side-pair conditional states."""
    out = np.zeros(DIM_CLUSTER, dtype=complex)
    for phi, central in ((d.phi1, pair_ket(Spin.UP, Spin.UP)),
                         (d.phi2, pair_ket(Spin.UP, Spin.DOWN)),
                         (d.phi2, pair_ket(Spin.DOWN, Spin.UP)),
                         (d.phi3, pair_ket(Spin.DOWN, Spin.DOWN))):
        out += 0.5 * np.kron(phi, central)
    return out
