"""Hilbert-space conventions for the four-spin diamond cluster.

The cluster consists of a side pair (spins 1, 2) and a central pair
(spins a, b).  States live in the 16-dimensional product space with the
fixed tensor order (S1, S2, Sa, Sb).  A z-basis product ket |s1 s2 sa sb>
maps to the flat index

    index = 8*b(s1) + 4*b(s2) + 2*b(sa) + b(sb),      b(up) = 0, b(down) = 1,

i.e. plain big-endian bit order with the side pair in the high bits.
Two-spin states of a single pair use the same convention on four
components (|uu>, |ud>, |du>, |dd>).

Analytic and numerically evolved states are compared modulo a global
phase via `phase_distance`.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

__all__ = [
    "Spin",
    "DIM_CLUSTER",
    "DIM_PAIR",
    "PAIR_LABELS",
    "basis_index",
    "basis_tuple",
    "basis_label",
    "single_ket",
    "pair_ket",
    "product_state",
    "norm",
    "normalize",
    "require_normalized",
    "inner",
    "phase_distance",
]

DIM_CLUSTER = 16
DIM_PAIR = 4

PAIR_LABELS = ("uu", "ud", "du", "dd")


class Spin(IntEnum):
    """Spin-1/2 z projection label; the value is the basis bit."""

    UP = 0
    DOWN = 1

    @property
    def sz(self) -> float:
        """z projection in units of hbar (+1/2 for up, -1/2 for down)."""
        return 0.5 if self is Spin.UP else -0.5


def basis_index(s1: Spin, s2: Spin, sa: Spin, sb: Spin) -> int:
    """Flat index of the product ket |s1 s2 sa sb>."""
    return 8 * int(s1) + 4 * int(s2) + 2 * int(sa) + int(sb)


def basis_tuple(index: int) -> tuple[Spin, Spin, Spin, Spin]:
    """Inverse of `basis_index`."""
    if not 0 <= index < DIM_CLUSTER:
        raise ValueError(f"basis index out of range: {index}")
    return (
        Spin((index >> 3) & 1),
        Spin((index >> 2) & 1),
        Spin((index >> 1) & 1),
        Spin(index & 1),
    )


def basis_label(index: int) -> str:
    """Four-letter u/d label of a product ket, side pair first."""
    return "".join("u" if s is Spin.UP else "d" for s in basis_tuple(index))


def single_ket(s: Spin) -> np.ndarray:
    """Single-spin z eigenket as a length-2 complex vector."""
    v = np.zeros(2, dtype=complex)
    v[int(s)] = 1.0
    return v


def pair_ket(first: Spin, second: Spin) -> np.ndarray:
    """Two-spin z product ket as a length-4 complex vector."""
    v = np.zeros(DIM_PAIR, dtype=complex)
    v[2 * int(first) + int(second)] = 1.0
    return v


def product_state(side: np.ndarray, central: np.ndarray) -> np.ndarray:
    """Full cluster state from a side-pair factor and a central-pair factor."""
    return np.kron(np.asarray(side, dtype=complex), np.asarray(central, dtype=complex))


def norm(v: np.ndarray) -> float:
    return float(np.linalg.norm(v))


def normalize(v: np.ndarray) -> np.ndarray:
    """Return v / ||v||; rejects vectors with vanishing norm."""
    n = np.linalg.norm(v)
    if n < 1e-12:
        raise ValueError("cannot normalize a (near-)zero vector")
    return np.asarray(v, dtype=complex) / n


def require_normalized(v: np.ndarray, tol: float = 1e-9, what: str = "state") -> None:
    """Raise ValueError unless ||v|| = 1 within tol."""
    n = np.linalg.norm(v)
    if abs(n - 1.0) > tol:
        raise ValueError(f"{what} is not normalized: ||v|| = {n}")


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """Hermitian inner product <u|v>, conjugate-linear in the first slot."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def phase_distance(u: np.ndarray, v: np.ndarray) -> float:
    """Distance between rays: sqrt(2 - 2|<u|v>|), zero iff u = e^{i a} v.

    Both arguments must be normalized; the value lies in [0, sqrt(2)].
    Evaluated as min_a ||u - e^{i a} v|| with the optimal phase plugged
    in, which is the same number without the catastrophic cancellation
    of the naive 2 - 2|<u|v>| (that form cannot resolve distances below
    about 1e-8 in double precision).
    """
    overlap = inner(u, v)
    if abs(overlap) < 1e-15:
        return float(np.sqrt(2.0))
    aligned = np.asarray(v, dtype=complex) * (overlap.conjugate() / abs(overlap))
    return float(np.linalg.norm(np.asarray(u, dtype=complex) - aligned))
