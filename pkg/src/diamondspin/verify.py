"""Self-check suites: every closed form against the numerical oracle.

Each suite draws random parameters from a seeded generator, evaluates
an analytic expression and its brute-force counterpart, and reports the
worst deviation seen together with the tolerance it must stay under.
The suites call the formula functions through their modules, so a
deliberately broken formula is caught in the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi, sqrt

import numpy as np

from . import entanglement, evolution, hamiltonian, measurement, protocols
from .hamiltonian import ClusterParams
from .hilbert import Spin, phase_distance

__all__ = ["SuiteResult", "run_all", "SUITES"]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    worst: float
    tolerance: float
    passed: bool
    trials: int


def _random_params(rng, scale: float = 10.0) -> ClusterParams:
    j, jz, j0, h, hp = rng.uniform(-scale, scale, size=5)
    return ClusterParams(J=j, Jz=jz, J0=j0, h=h, hp=hp)


def _random_direction(rng) -> measurement.MeasurementDirection:
    return measurement.MeasurementDirection(theta=rng.uniform(0.0, pi),
                                            phi=rng.uniform(0.0, 2.0 * pi))


def _random_unit_pair(rng) -> tuple[complex, complex]:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return complex(v[0]), complex(v[1])


def _random_init(rng) -> evolution.InitialProductState:
    c1, c2 = _random_unit_pair(rng)
    c3, c4 = _random_unit_pair(rng)
    sides = ((Spin.UP, Spin.UP), (Spin.UP, Spin.DOWN),
             (Spin.DOWN, Spin.UP), (Spin.DOWN, Spin.DOWN))
    side = sides[int(rng.integers(4))]
    return evolution.InitialProductState(c1=c1, c2=c2, c3=c3, c4=c4, side=side)


def _evolved_xplus(p: ClusterParams, t: float) -> np.ndarray:
    ham = hamiltonian.build_hamiltonian(p)
    return evolution.evolve_oracle(ham, evolution.xplus_state(), t)


def suite_commuting_terms(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        worst = max(worst, *hamiltonian.commutator_norms(_random_params(rng)))
    return SuiteResult("commuting-terms", worst, 1e-13, worst < 1e-13, trials)


def suite_eigen_residuals(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        worst = max(worst, float(np.max(
            hamiltonian.eigen_residuals(_random_params(rng)))))
    return SuiteResult("eigen-residuals", worst, 1e-12, worst < 1e-12, trials)


def suite_spectrum_match(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        analytic = np.sort([e.energy for e in
                            hamiltonian.analytic_eigensystem(p)])
        numeric = np.linalg.eigvalsh(hamiltonian.build_hamiltonian(p).total)
        worst = max(worst, float(np.max(np.abs(analytic - numeric))))
    return SuiteResult("spectrum-match", worst, 1e-10, worst < 1e-10, trials)


def suite_stationary_evolution(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        init = _random_init(rng)
        t = rng.uniform(0.0, 8.0)
        closed = evolution.evolve_stationary_sides(p, init, t)
        ham = hamiltonian.build_hamiltonian(p)
        full = evolution.evolve_oracle(ham, init.full_state(), t)
        side_index = 2 * int(init.side[0]) + int(init.side[1])
        block = full.reshape(4, 4)[side_index]
        worst = max(worst, phase_distance(closed, block / np.linalg.norm(block)))
    return SuiteResult("stationary-evolution", worst, 1e-10, worst < 1e-10,
                       trials)


def suite_xplus_decomposition(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        t = rng.uniform(0.0, 8.0)
        decomposed = evolution.evolve_xplus_decomposed(p, t)
        oracle = _evolved_xplus(p, t)
        for assembled in (evolution.assemble_from_central(decomposed),
                          evolution.assemble_from_side(decomposed)):
            worst = max(worst, phase_distance(assembled, oracle),
                        float(np.max(np.abs(assembled - oracle))))
    return SuiteResult("xplus-decomposition", worst, 1e-10, worst < 1e-10,
                       trials)


def suite_concurrence_formulas(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        t = rng.uniform(0.0, 8.0)

        init = _random_init(rng)
        ham = hamiltonian.build_hamiltonian(p)
        full = evolution.evolve_oracle(ham, init.full_state(), t)
        side_index = 2 * int(init.side[0]) + int(init.side[1])
        block = full.reshape(4, 4)[side_index]
        central = block / np.linalg.norm(block)
        worst = max(worst, abs(entanglement.concurrence_stationary(p, init, t)
                               - entanglement.concurrence_pure(central)))

        phi1, phi2 = rng.uniform(0.0, 2.0 * pi, size=2)
        xy_init = evolution.InitialProductState(
            c1=1.0 / sqrt(2.0), c2=np.exp(1j * phi1) / sqrt(2.0),
            c3=1.0 / sqrt(2.0), c4=np.exp(1j * phi2) / sqrt(2.0))
        xy_full = evolution.evolve_oracle(ham, xy_init.full_state(), t)
        xy_block = xy_full.reshape(4, 4)[0]
        xy_central = xy_block / np.linalg.norm(xy_block)
        worst = max(worst, abs(entanglement.concurrence_xy(p.J, p.Jz,
                                                           phi1 - phi2, t)
                               - entanglement.concurrence_pure(xy_central)))

        psi = _evolved_xplus(p, t)
        z_axis = measurement.MeasurementDirection(theta=0.0, phi=0.0)
        mixed = measurement.measure_pair(psi, measurement.Pair.SIDES, z_axis)[1]
        worst = max(worst, abs(entanglement.concurrence_xi(p.J, p.Jz, t)
                               - entanglement.concurrence_pure(mixed.post_state)))

        bell_dir = protocols.bell_conditions(p, t)
        last = measurement.measure_pair(psi, measurement.Pair.SIDES, bell_dir)[3]
        worst = max(worst, abs(entanglement.concurrence_psi3(p.J, p.Jz, p.J0, t)
                               - entanglement.concurrence_pure(last.post_state)))
    return SuiteResult("concurrence-formulas", worst, 1e-10, worst < 1e-10,
                       trials)


def suite_born_weights(rng, trials: int) -> SuiteResult:
    worst = 0.0
    z_axis = measurement.MeasurementDirection(theta=0.0, phi=0.0)
    for _ in range(trials):
        p = _random_params(rng)
        t = rng.uniform(0.0, 8.0)
        psi = _evolved_xplus(p, t)

        for record in measurement.measure_pair(psi, measurement.Pair.SIDES,
                                               z_axis):
            worst = max(worst, abs(record.probability - 0.25))

        d = _random_direction(rng)
        a1, a2, a3 = measurement.side_branch_amplitudes(p, d, t)
        expected = (a1 ** -2 / 16.0, a2 ** -2 / 16.0,
                    a2 ** -2 / 16.0, a3 ** -2 / 16.0)
        records = measurement.measure_pair(psi, measurement.Pair.SIDES, d)
        for record, want in zip(records, expected):
            worst = max(worst, abs(record.probability - want))

        central = measurement.measure_pair(psi, measurement.Pair.CENTRALS,
                                           z_axis)
        for record in central:
            worst = max(worst, abs(record.probability - 0.25))
            worst = max(worst,
                        entanglement.concurrence_pure(record.post_state))
    return SuiteResult("born-weights", worst, 1e-12, worst < 1e-12, trials)


def suite_branch_states(rng, trials: int) -> SuiteResult:
    worst = 0.0
    z_axis = measurement.MeasurementDirection(theta=0.0, phi=0.0)
    for _ in range(trials):
        p = _random_params(rng)
        t = rng.uniform(0.0, 8.0)
        psi = _evolved_xplus(p, t)
        decomposed = evolution.evolve_xplus_decomposed(p, t)

        d = _random_direction(rng)
        records = measurement.measure_pair(psi, measurement.Pair.SIDES, d)
        closed = measurement.side_branch_states(p, d, t)
        for record, want in zip(records, (closed[0], closed[1], closed[1],
                                          closed[2])):
            if record.reachable and want is not None:
                worst = max(worst, phase_distance(record.post_state, want))

        side_z = measurement.measure_pair(psi, measurement.Pair.SIDES, z_axis)
        for record, want in zip(side_z, (decomposed.xi1, decomposed.xi2,
                                         decomposed.xi2, decomposed.xi3)):
            worst = max(worst, phase_distance(record.post_state, want))

        central_z = measurement.measure_pair(psi, measurement.Pair.CENTRALS,
                                             z_axis)
        for record, want in zip(central_z, (decomposed.phi1, decomposed.phi2,
                                            decomposed.phi2, decomposed.phi3)):
            worst = max(worst, phase_distance(record.post_state, want))
    return SuiteResult("branch-states", worst, 1e-10, worst < 1e-10, trials)


def suite_bell_curves(rng, trials: int) -> SuiteResult:
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        t = rng.uniform(0.05, 8.0)
        f1, f2, f3 = entanglement.bell_fidelity_curves(p.J0, t)
        worst = max(worst, abs(f1 + f2 + f3 - 1.0))

        d = protocols.bell_conditions(p, t)
        psi = _evolved_xplus(p, t)
        records = measurement.measure_pair(psi, measurement.Pair.SIDES, d)
        worst = max(worst, abs(records[0].probability - f1),
                    abs(records[1].probability + records[2].probability - f2),
                    abs(records[3].probability - f3))
    return SuiteResult("bell-curves", worst, 1e-12, worst < 1e-12, trials)


def suite_protocol_recipes(rng, trials: int) -> SuiteResult:
    worst = 0.0
    variants = (
        (protocols.BellTarget.PHI_PLUS, None, False),
        (protocols.BellTarget.PHI_MINUS, None, False),
        (protocols.BellTarget.PHI_PLUS, measurement.PairOutcome.PLUS_MINUS, False),
        (protocols.BellTarget.PHI_MINUS, measurement.PairOutcome.PLUS_MINUS, False),
        (protocols.BellTarget.PHI_PLUS, measurement.PairOutcome.PLUS_MINUS, True),
        (protocols.BellTarget.PHI_MINUS, measurement.PairOutcome.PLUS_MINUS, True),
        (protocols.BellTarget.PSI_PLUS, None, False),
    )
    for _ in range(max(1, trials // 10)):
        j, jz, h, hp = rng.uniform(-10.0, 10.0, size=4)
        j0 = rng.uniform(0.2, 10.0) * (1.0 if rng.uniform() < 0.5 else -1.0)
        p = ClusterParams(J=j, Jz=jz, J0=j0, h=h, hp=hp)
        for target, branch, late in variants:
            recipe = protocols.prepare_bell_on_centrals(p, target,
                                                        branch=branch, late=late)
            run = protocols.execute_recipe(recipe)
            worst = max(worst, abs(run.fidelity - recipe.expected_fidelity),
                        abs(run.probability - recipe.expected_probability))
    return SuiteResult("protocol-recipes", worst, 1e-9, worst < 1e-9,
                       max(1, trials // 10))


SUITES = (
    suite_commuting_terms,
    suite_eigen_residuals,
    suite_spectrum_match,
    suite_stationary_evolution,
    suite_xplus_decomposition,
    suite_concurrence_formulas,
    suite_born_weights,
    suite_branch_states,
    suite_bell_curves,
    suite_protocol_recipes,
)


def run_all(seed: int = 0, trials: int = 100) -> list[SuiteResult]:
    """Run every suite on its own seeded stream; deterministic for a given
    (seed, trials)."""
    results = []
    for index, suite in enumerate(SUITES):
        rng = np.random.default_rng((seed, index))
        results.append(suite(rng, trials))
    return results
