"""Measurement-controlled preparation of Bell states on the central pair.

Start from all four spins polarized along +x, evolve, then measure the
side pair along the direction theta = pi/2, phi = h t - pi (the Bell
direction, `bell_conditions`).  Each outcome collapses the central pair
onto

    ++            (|uu> + e^{2 i hp t} |dd>) / sqrt2
    +-  and  -+   (|uu> - e^{2 i hp t} |dd>) / sqrt2
    --            psi3, which is (|ud> + |du>) / sqrt2 when J0 t = pi

so tuning hp and the measurement time turns three of the four Bell
states into deterministic targets:

    target    branch   time         hp (default)   success probability
    phi+      ++       pi / J0      0              1/2
    phi-      ++       pi / J0      J0 / 2         1/2
    phi-      +- -+    pi / (2 J0)  0              1/4
    phi+      +- -+    pi / (2 J0)  J0             1/4
    psi+      --       pi / J0      unconstrained  1/2

The singlet psi- never appears on any branch of this protocol, so
requesting it raises `UnsupportedTargetError`.  The two mixed outcomes
leave the centrals in the same state, hence their probabilities are
counted together.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from math import cos, pi, sin, sqrt

import numpy as np

from .entanglement import concurrence_pure, fidelity
from .evolution import evolve_oracle, xplus_state
from .hamiltonian import ClusterParams, build_hamiltonian
from .measurement import (MeasurementDirection, MeasurementRecord, Pair,
                          PairOutcome, measure_pair)

__all__ = [
    "BellTarget",
    "ProtocolRecipe",
    "RecipeExecution",
    "UnsupportedTargetError",
    "bell_state",
    "bell_conditions",
    "bell_condition_residual",
    "prepare_bell_on_centrals",
    "execute_recipe",
    "prepare_on_sides",
]


class UnsupportedTargetError(ValueError):
    """Requested Bell state is not reachable by any branch of the protocol."""


class BellTarget(Enum):
    PHI_PLUS = "phi-plus"
    PHI_MINUS = "phi-minus"
    PSI_PLUS = "psi-plus"
    PSI_MINUS = "psi-minus"


_BELL_VECTORS = {
    BellTarget.PHI_PLUS: np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / sqrt(2.0),
    BellTarget.PHI_MINUS: np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) / sqrt(2.0),
    BellTarget.PSI_PLUS: np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) / sqrt(2.0),
    BellTarget.PSI_MINUS: np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / sqrt(2.0),
}


def bell_state(target: BellTarget | str) -> np.ndarray:
    """The four Bell vectors in the (|uu>, |ud>, |du>, |dd>) basis."""
    return _BELL_VECTORS[BellTarget(target)].copy()


def bell_conditions(p: ClusterParams, t: float) -> MeasurementDirection:
    """Side-measurement direction that kills the mixed component of the
    ++ branch: theta = pi/2, phi = h t - pi (mod 2 pi)."""
    return MeasurementDirection(theta=0.5 * pi, phi=(p.h * t - pi) % (2.0 * pi))


def bell_condition_residual(d: MeasurementDirection, h: float, t: float) -> float:
    """|cos(theta/2) + sin(theta/2) e^{i (h t - phi)}|; zero on the Bell
    direction."""
    return abs(cos(0.5 * d.theta)
               + sin(0.5 * d.theta) * np.exp(1j * (h * t - d.phi)))


@dataclass(frozen=True)
class ProtocolRecipe:
    """Everything needed to run one preparation: which pair to measure,
    along which direction, at what time, with which central field.

    `n` is the integer in hp t = pi n / 2 selecting the hp family;
    `success_outcomes` lists the branches that yield the target (the two
    mixed outcomes always appear together)."""

    target: BellTarget
    params: ClusterParams
    pair_measured: Pair
    direction: MeasurementDirection
    time: float
    required_hp: float
    branch: PairOutcome
    success_outcomes: tuple[PairOutcome, ...]
    expected_probability: float
    expected_fidelity: float
    n: int


@dataclass(frozen=True)
class RecipeExecution:
    """Outcome of running a recipe end to end on the exact simulator."""

    recipe: ProtocolRecipe
    records: tuple[MeasurementRecord, ...]
    probability: float
    fidelity: float
    concurrence: float
    post_state: np.ndarray


def _mixed_route_defaults(target: BellTarget, late: bool) -> int:
    # Post state on the mixed branches is (|uu> - e^{2 i hp T} |dd>)/sqrt2:
    # even n gives phi-, odd n gives phi+.  Defaults reproduce the quoted
    # field values hp = 0 and hp = J0 at both measurement times.
    if target is BellTarget.PHI_MINUS:
        return 0
    return 3 if late else 1


def prepare_bell_on_centrals(p: ClusterParams, target: BellTarget | str,
                             branch: PairOutcome | str | None = None,
                             n: int | None = None,
                             late: bool = False) -> ProtocolRecipe:
    """Build the recipe that prepares `target` on the central pair.

    branch picks the measurement outcome to condition on (defaults:
    ++ for the phi targets, -- for psi+); the two mixed outcomes are
    interchangeable.  n overrides the integer in hp t = pi n / 2, with
    the parity fixed by the target.  late moves the mixed-branch
    measurement from t = pi/(2 J0) to 3 pi/(2 J0).
    """
    target = BellTarget(target)
    if target is BellTarget.PSI_MINUS:
        raise UnsupportedTargetError(
            "no recipe reaches psi-minus: no branch of the side measurement "
            "leaves the central pair in the singlet")
    if p.J0 == 0.0:
        raise ValueError("J0 = 0 leaves the pairs uncoupled; the measurement "
                         "times pi/J0 and pi/(2 J0) are undefined")

    if branch is not None:
        branch = PairOutcome(branch)
        if branch is PairOutcome.MINUS_PLUS:
            branch = PairOutcome.PLUS_MINUS

    if target is BellTarget.PSI_PLUS:
        if branch not in (None, PairOutcome.MINUS_MINUS):
            raise ValueError("psi-plus appears on the -- branch only")
        if late:
            raise ValueError("late applies to the mixed-branch recipes only")
        time = pi / abs(p.J0)
        chosen_n = 0 if n is None else n
        recipe_hp = p.hp  # any hp works: the -- post at J0 t = pi is hp-free
        branch = PairOutcome.MINUS_MINUS
        success = (branch,)
        probability = 0.5
    elif branch in (None, PairOutcome.PLUS_PLUS):
        if late:
            raise ValueError("late applies to the mixed-branch recipes only")
        branch = PairOutcome.PLUS_PLUS
        time = pi / abs(p.J0)
        # ++ post is (|uu> + e^{2 i hp T}|dd>)/sqrt2: even n -> phi+, odd -> phi-.
        default = 0 if target is BellTarget.PHI_PLUS else 1
        chosen_n = default if n is None else n
        if chosen_n % 2 != default % 2:
            raise ValueError(f"n must be {'even' if default == 0 else 'odd'} "
                             f"for {target.value} on the ++ branch")
        recipe_hp = 0.5 * pi * chosen_n / time
        success = (branch,)
        probability = 0.5
    elif branch is PairOutcome.PLUS_MINUS:
        time = (1.5 if late else 0.5) * pi / abs(p.J0)
        default = _mixed_route_defaults(target, late)
        chosen_n = default if n is None else n
        if chosen_n % 2 != default % 2:
            raise ValueError(f"n must be {'even' if default % 2 == 0 else 'odd'} "
                             f"for {target.value} on a mixed branch")
        recipe_hp = 0.5 * pi * chosen_n / time
        success = (PairOutcome.PLUS_MINUS, PairOutcome.MINUS_PLUS)
        probability = 0.25
    else:
        raise ValueError(f"the -- branch prepares psi-plus, not {target.value}")

    params = replace(p, hp=recipe_hp)
    direction = bell_conditions(params, time)
    return ProtocolRecipe(target=target, params=params,
                          pair_measured=Pair.SIDES, direction=direction,
                          time=time, required_hp=recipe_hp, branch=branch,
                          success_outcomes=success,
                          expected_probability=probability,
                          expected_fidelity=1.0, n=chosen_n)


def execute_recipe(recipe: ProtocolRecipe) -> RecipeExecution:
    """Run a recipe on the exact simulator and report what it achieved."""
    ham = build_hamiltonian(recipe.params)
    psi = evolve_oracle(ham, xplus_state(), recipe.time)
    records = measure_pair(psi, recipe.pair_measured, recipe.direction)
    by_outcome = {r.outcome: r for r in records}
    hits = [by_outcome[o] for o in recipe.success_outcomes]
    probability = sum(r.probability for r in hits)
    post = hits[0].post_state
    target_vec = bell_state(recipe.target)
    return RecipeExecution(recipe=recipe, records=records,
                           probability=probability,
                           fidelity=fidelity(post, target_vec),
                           concurrence=concurrence_pure(post),
                           post_state=post)


def prepare_on_sides(p: ClusterParams, d: MeasurementDirection,
                     t: float) -> tuple[MeasurementRecord, ...]:
    """Measure the central pair of the evolved +x state along d, leaving
    the side pair in one of four conditional states.

    At J = Jz the four side states mirror the central-pair branches with
    the roles of h and hp swapped.
    """
    ham = build_hamiltonian(p)
    psi = evolve_oracle(ham, xplus_state(), t)
    return measure_pair(psi, Pair.CENTRALS, d)
