"""Exact simulator of a four-spin Ising-Heisenberg diamond cluster.

A central spin pair with anisotropic XXZ exchange couples to a side
pair through an Ising zz term; longitudinal fields address the two
pairs separately.  The package provides the closed-form eigensystem,
unitary evolution (closed forms cross-checked against a dense oracle),
projective pair measurements along arbitrary directions, concurrence
and fidelity diagnostics, measurement-controlled Bell-state
preparation recipes, and deterministic parameter sweeps with optional
rendered figures.
"""

__version__ = "0.1.0"

from .entanglement import (bell_fidelity_curves, concurrence_psi3,
                           concurrence_pure, concurrence_stationary,
                           concurrence_xi, concurrence_xy, fidelity)
from .evolution import (DecomposedState, InitialProductState,
                        assemble_from_central, assemble_from_side,
                        evolve_oracle, evolve_stationary_sides,
                        evolve_xplus_decomposed, xplus_state)
from .hamiltonian import (ClusterHamiltonian, ClusterParams, EigenPair,
                          analytic_eigensystem, build_hamiltonian,
                          commutator_norms, eigen_residuals)
from .hilbert import (Spin, basis_index, basis_label, basis_tuple, inner,
                      normalize, pair_ket, phase_distance, product_state,
                      single_ket)
from .measurement import (MeasurementDirection, MeasurementRecord, Pair,
                          PairOutcome, UnreachableOutcomeError,
                          direction_basis, measure_pair, pair_basis_change,
                          sample_measurement, side_branch_amplitudes,
                          side_branch_states)
from .protocols import (BellTarget, ProtocolRecipe, RecipeExecution,
                        UnsupportedTargetError, bell_condition_residual,
                        bell_conditions, bell_state, execute_recipe,
                        prepare_bell_on_centrals, prepare_on_sides)
from .sweep import (AxisSpec, SweepConfig, SweepError, SweepQuantity,
                    SweepTable, render_csv, run_preset, run_sweep, write_csv)
from .verify import SuiteResult, run_all

__all__ = [
    "__version__",
    "Spin", "basis_index", "basis_tuple", "basis_label", "single_ket",
    "pair_ket", "product_state", "inner", "normalize", "phase_distance",
    "ClusterParams", "ClusterHamiltonian", "EigenPair", "build_hamiltonian",
    "analytic_eigensystem", "commutator_norms", "eigen_residuals",
    "InitialProductState", "DecomposedState", "xplus_state", "evolve_oracle",
    "evolve_stationary_sides", "evolve_xplus_decomposed",
    "assemble_from_central", "assemble_from_side",
    "MeasurementDirection", "Pair", "PairOutcome", "MeasurementRecord",
    "UnreachableOutcomeError", "direction_basis", "pair_basis_change",
    "measure_pair", "sample_measurement", "side_branch_states",
    "side_branch_amplitudes",
    "concurrence_pure", "fidelity", "concurrence_stationary",
    "concurrence_xy", "concurrence_xi", "concurrence_psi3",
    "bell_fidelity_curves",
    "BellTarget", "ProtocolRecipe", "RecipeExecution",
    "UnsupportedTargetError", "bell_state", "bell_conditions",
    "bell_condition_residual", "prepare_bell_on_centrals", "execute_recipe",
    "prepare_on_sides",
    "SweepError", "SweepQuantity", "AxisSpec", "SweepConfig", "SweepTable",
    "run_sweep", "run_preset", "render_csv", "write_csv",
    "SuiteResult", "run_all",
]
