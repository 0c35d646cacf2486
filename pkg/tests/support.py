"""Shared test helpers: random draws and independent oracles.

Everything here is deliberately written without touching the library's
own assembly code: the bit-rule Hamiltonian builds the matrix straight
from the basis encoding, and the rotated reference state is a hand
expansion of the evolved +x state in the measured-pair basis.  Tests
compare library output against these.
"""

from math import cos, sin, sqrt

import numpy as np

from diamondspin import (
    ClusterParams,
    InitialProductState,
    MeasurementDirection,
    Spin,
    basis_index,
    basis_tuple,
    build_hamiltonian,
    direction_basis,
    evolve_oracle,
    xplus_state,
)

SIDE_KETS = ((Spin.UP, Spin.UP), (Spin.UP, Spin.DOWN),
             (Spin.DOWN, Spin.UP), (Spin.DOWN, Spin.DOWN))


def random_params(rng, scale: float = 10.0) -> ClusterParams:
    j, jz, j0, h, hp = rng.uniform(-scale, scale, size=5)
    return ClusterParams(J=j, Jz=jz, J0=j0, h=h, hp=hp)


def random_direction(rng) -> MeasurementDirection:
    return MeasurementDirection(theta=rng.uniform(0.0, np.pi),
                                phi=rng.uniform(0.0, 2.0 * np.pi))


def random_unit_pair(rng) -> tuple[complex, complex]:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return complex(v[0]), complex(v[1])


def random_init(rng, side=None) -> InitialProductState:
    c1, c2 = random_unit_pair(rng)
    c3, c4 = random_unit_pair(rng)
    if side is None:
        side = SIDE_KETS[int(rng.integers(4))]
    return InitialProductState(c1=c1, c2=c2, c3=c3, c4=c4, side=side)


def random_cluster_state(rng) -> np.ndarray:
    v = rng.normal(size=16) + 1j * rng.normal(size=16)
    return v / np.linalg.norm(v)


def evolved_xplus(p: ClusterParams, t: float) -> np.ndarray:
    return evolve_oracle(build_hamiltonian(p), xplus_state(), t)


def bit_rule_hamiltonian(p: ClusterParams) -> np.ndarray:
    """Dense matrix built directly from the basis bit encoding.

    Diagonal: Jz ma mb + hp (ma + mb) + h (m1 + m2) + J0 (ma + mb)(m1 + m2).
    Off-diagonal: J/2 between |..ud> and |..du> of the central pair.
    """
    h = np.zeros((16, 16))
    for i in range(16):
        s1, s2, sa, sb = basis_tuple(i)
        m1, m2, ma, mb = s1.sz, s2.sz, sa.sz, sb.sz
        h[i, i] = (p.Jz * ma * mb + p.hp * (ma + mb) + p.h * (m1 + m2)
                   + p.J0 * (ma + mb) * (m1 + m2))
        if sa is not sb:
            h[i, basis_index(s1, s2, sb, sa)] += 0.5 * p.J
    return h


def rotated_reference_state(p: ClusterParams, d: MeasurementDirection,
                            t: float) -> np.ndarray:
    """Evolved +x state expanded by hand in the rotated central-pair basis.

    The side pair stays in z kets; the central pair is written in the
    (|++>, |+->, |-+>, |-->) basis of the measurement direction.  The
    component arrays below were derived by hand, independently of
    the library's decomposition and branch-state code, and serve as a
    frozen cross-check for measure_pair and side_branch_states.
    """
    th, ph = d.theta, d.phi
    c2 = cos(0.5 * th) ** 2
    s2 = sin(0.5 * th) ** 2
    st = sin(th)
    ct = cos(th)

    mid = np.exp(-1j * (0.5 * p.J - 0.5 * p.Jz) * t)
    a = np.exp(-1j * (ph - p.hp * t))
    eh = np.exp(-1j * p.h * t)
    ej0 = np.exp(-1j * p.J0 * t)

    plus_block = 0.25 * np.exp(-1j * (0.25 * p.Jz + p.hp) * t) * np.array([
        eh * (c2 * ej0 + st * a * mid + s2 * a ** 2 / ej0),
        (c2 + st * a * mid + s2 * a ** 2),
        (c2 + st * a * mid + s2 * a ** 2),
        (c2 / ej0 + st * a * mid + s2 * a ** 2 * ej0) / eh,
    ])
    mixed_block = 0.25 * np.exp(-1j * 0.25 * p.Jz * t) * np.array([
        eh * (ct * mid + 1j * st * sin((p.hp + p.J0) * t - ph)),
        (ct * mid + 1j * st * sin(p.hp * t - ph)),
        (ct * mid + 1j * st * sin(p.hp * t - ph)),
        (ct * mid + 1j * st * sin((p.hp - p.J0) * t - ph)) / eh,
    ])
    minus_block = 0.25 * np.exp(-1j * (0.25 * p.Jz - p.hp) * t) * np.array([
        eh * (s2 / a ** 2 * ej0 - st / a * mid + c2 / ej0),
        (s2 / a ** 2 - st / a * mid + c2),
        (s2 / a ** 2 - st / a * mid + c2),
        (s2 / a ** 2 / ej0 - st / a * mid + c2 * ej0) / eh,
    ])

    plus, minus = direction_basis(d)
    ket_pp = np.kron(plus, plus)
    ket_pm = np.kron(plus, minus)
    ket_mp = np.kron(minus, plus)
    ket_mm = np.kron(minus, minus)

    out = np.zeros(16, dtype=complex)
    for i, (s1, s2_spin) in enumerate(SIDE_KETS):
        side = np.zeros(4, dtype=complex)
        side[2 * int(s1) + int(s2_spin)] = 1.0
        central = (plus_block[i] * ket_pp
                   + mixed_block[i] * (ket_pm + ket_mp)
                   + minus_block[i] * ket_mm)
        out += np.kron(side, central)
    return out


def bloch_vector(theta: float, phi: float) -> np.ndarray:
    """Cartesian unit vector for spherical angles, no canonicalization."""
    return np.array([sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta)])


def haar_qubit_unitary(rng) -> np.ndarray:
    """Random 2x2 unitary from the QR decomposition of a Ginibre matrix."""
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def xy_plane_init(phi1: float, phi2: float) -> InitialProductState:
    """Both central spins in the xy plane with azimuths phi1, phi2."""
    r = 1.0 / sqrt(2.0)
    return InitialProductState(c1=r, c2=r * np.exp(1j * phi1),
                               c3=r, c4=r * np.exp(1j * phi2))
