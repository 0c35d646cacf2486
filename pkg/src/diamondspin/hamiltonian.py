"""Dense Hamiltonian of the diamond cluster and its exact eigensystem.

The central pair (a, b) carries an anisotropic XXZ exchange (J for the
xy part, Jz for the zz part) and a longitudinal field hp; the side pair
(1, 2) sees a longitudinal field h; the two pairs talk only through an
Ising coupling J0 between their total z magnetizations:

    H = J (Sax Sbx + Say Sby) + Jz Saz Sbz + hp (Saz + Sbz)
      + h (S1z + S2z)
      + J0 (Saz + Sbz)(S1z + S2z)

Spin operators are sigma/2 (z eigenvalues +-1/2) and hbar = 1, so
energies are angular frequencies.  The three summands commute pairwise,
which is why the full 16-state spectrum is available in closed form:
the side pair stays in a z product state while the central pair
diagonalizes in the triplet/singlet basis with an effective field
hp + J0 (m1 + m2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .hilbert import Spin, pair_ket, product_state

__all__ = [
    "ClusterParams",
    "ClusterHamiltonian",
    "EigenPair",
    "SPIN_X",
    "SPIN_Y",
    "SPIN_Z",
    "site_operator",
    "build_hamiltonian",
    "analytic_eigensystem",
    "commutator_norms",
    "eigen_residuals",
]

# Single-site spin operators, sigma/2.
SPIN_X = 0.5 * np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SPIN_Y = 0.5 * np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SPIN_Z = 0.5 * np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

_ID2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class ClusterParams:
    """Coupling constants and fields of the cluster.

    J    xy exchange of the central pair
    Jz   zz exchange of the central pair
    J0   Ising coupling between pair magnetizations
    h    longitudinal field on the side pair
    hp   longitudinal field on the central pair
    """

    J: float = 0.0
    Jz: float = 0.0
    J0: float = 0.0
    h: float = 0.0
    hp: float = 0.0

    def __post_init__(self):
        for name in ("J", "Jz", "J0", "h", "hp"):
            value = getattr(self, name)
            if not np.isfinite(value):
                raise ValueError(f"parameter {name} must be finite, got {value}")


@dataclass(frozen=True)
class ClusterHamiltonian:
    """The full matrix together with its three commuting summands."""

    central: np.ndarray
    side: np.ndarray
    coupling: np.ndarray
    total: np.ndarray


@dataclass(frozen=True)
class EigenPair:
    """One closed-form eigenstate: energy, 16-component vector, text label."""

    energy: float
    state: np.ndarray
    label: str


def site_operator(op: np.ndarray, site: int) -> np.ndarray:
    """Embed a single-site operator at tensor slot `site` (0..3: S1 S2 Sa Sb)."""
    factors = [_ID2] * 4
    factors[site] = op
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def build_hamiltonian(p: ClusterParams) -> ClusterHamiltonian:
    """Assemble the 16x16 matrix and its three summands.

    All blocks are real symmetric; the xy exchange contributes the only
    off-diagonal entries (J/2 between |ud> and |du> of the central pair).
    """
    s1z = site_operator(SPIN_Z, 0)
    s2z = site_operator(SPIN_Z, 1)
    sax = site_operator(SPIN_X, 2)
    sbx = site_operator(SPIN_X, 3)
    say = site_operator(SPIN_Y, 2)
    sby = site_operator(SPIN_Y, 3)
    saz = site_operator(SPIN_Z, 2)
    sbz = site_operator(SPIN_Z, 3)

    central = p.J * (sax @ sbx + say @ sby) + p.Jz * (saz @ sbz) + p.hp * (saz + sbz)
    side = p.h * (s1z + s2z)
    coupling = p.J0 * ((saz + sbz) @ (s1z + s2z))
    return ClusterHamiltonian(central=central, side=side, coupling=coupling,
                              total=central + side + coupling)


def _central_eigenbasis():
    """Central-pair eigenstates of the XXZ exchange: |uu>, triplet-0, singlet, |dd>."""
    uu = pair_ket(Spin.UP, Spin.UP)
    ud = pair_ket(Spin.UP, Spin.DOWN)
    du = pair_ket(Spin.DOWN, Spin.UP)
    dd = pair_ket(Spin.DOWN, Spin.DOWN)
    t0 = (ud + du) / sqrt(2.0)
    s0 = (ud - du) / sqrt(2.0)
    return (
        (uu, "|uu>", 1.0),
        (t0, "(|ud>+|du>)/sqrt2", 0.0),
        (s0, "(|ud>-|du>)/sqrt2", 0.0),
        (dd, "|dd>", -1.0),
    )


def analytic_eigensystem(p: ClusterParams) -> list[EigenPair]:
    """All 16 eigenpairs in closed form.

    Ordered by side-pair ket (uu, ud, du, dd), then central state
    (|uu>, triplet-0, singlet, |dd>).  For side magnetization
    m12 = m1 + m2 the energies are

        E(uu ket)    = h m12 + Jz/4 + (hp + J0 m12)
        E(triplet-0) = h m12 + J/2 - Jz/4
        E(singlet)   = h m12 - J/2 - Jz/4
        E(dd ket)    = h m12 + Jz/4 - (hp + J0 m12)
    """
    pairs: list[EigenPair] = []
    side_kets = (
        (Spin.UP, Spin.UP, 1.0, "uu"),
        (Spin.UP, Spin.DOWN, 0.0, "ud"),
        (Spin.DOWN, Spin.UP, 0.0, "du"),
        (Spin.DOWN, Spin.DOWN, -1.0, "dd"),
    )
    for first, second, m12, side_name in side_kets:
        side_vec = pair_ket(first, second)
        heff = p.hp + p.J0 * m12
        central_energies = (
            p.Jz / 4.0 + heff,
            p.J / 2.0 - p.Jz / 4.0,
            -p.J / 2.0 - p.Jz / 4.0,
            p.Jz / 4.0 - heff,
        )
        for (central_vec, central_name, _), e_ab in zip(_central_eigenbasis(),
                                                        central_energies):
            energy = p.h * m12 + e_ab
            state = product_state(side_vec, central_vec)
            pairs.append(EigenPair(energy=float(energy), state=state,
                                   label=f"|{side_name}>12 {central_name}ab"))
    return pairs


def commutator_norms(p: ClusterParams) -> tuple[float, float, float]:
    """Max-abs entries of the three pairwise commutators of the summands.

    All three vanish identically; the returned values only probe floating
    point rounding.
    """
    ham = build_hamiltonian(p)
    parts = (ham.central, ham.side, ham.coupling)
    out = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        comm = parts[i] @ parts[j] - parts[j] @ parts[i]
        out.append(float(np.max(np.abs(comm))))
    return tuple(out)


def eigen_residuals(p: ClusterParams) -> np.ndarray:
    """Two-norm of H psi - E psi for every closed-form pair."""
    h = build_hamiltonian(p).total
    return np.array([float(np.linalg.norm(h @ ep.state - ep.energy * ep.state))
                     for ep in analytic_eigensystem(p)])
