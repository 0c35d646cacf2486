"""Deterministic parameter sweeps emitting delimited text tables.

A sweep evaluates one quantity on a rectangular grid of one or two
axes.  Axes are the dimensionless combinations used throughout (Jt,
Jzt, J0t), bare angles (theta, phi, dphi) or the time t; anything the
quantity needs that is not an axis comes from the `fixed` map, either
directly or as a bare coupling (J, Jz, J0, h, hp) multiplied by t.

Closed-form quantities (concurrence-xy, concurrence-xi,
concurrence-psi3, bell-fidelities) evaluate their formulas; the
oracle-concurrence and measure-probabilities quantities run the full
evolve-and-measure pipeline per grid point, one column per outcome.

Output is CSV: header of axis names then component names, rows in
lexicographic axis order, floats printed with 12 significant digits,
newline-terminated lines, UTF-8.  Identical configs produce
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import pi
from pathlib import Path
from typing import Callable, Mapping

import numpy as np

from .entanglement import (bell_fidelity_curves, concurrence_psi3,
                           concurrence_pure, concurrence_xi, concurrence_xy)
from .evolution import evolve_oracle, xplus_state
from .hamiltonian import ClusterParams, build_hamiltonian
from .measurement import MeasurementDirection, Pair, measure_pair

__all__ = [
    "SweepError",
    "SweepQuantity",
    "AxisSpec",
    "SweepConfig",
    "SweepTable",
    "AXIS_NAMES",
    "PRESET_NAMES",
    "run_sweep",
    "run_preset",
    "render_csv",
    "write_csv",
]

AXIS_NAMES = ("Jt", "Jzt", "J0t", "dphi", "theta", "phi", "t")
_COUPLINGS = ("J", "Jz", "J0", "h", "hp")
_FIXED_NAMES = AXIS_NAMES + _COUPLINGS

PRESET_NAMES = ("fig2", "fig3", "fig4")

FIG2_AXIS = (0.0, 4.0 * pi, 81)
FIG3_AXIS = (0.0, 2.0 * pi, 201)
FIG4_AXIS = (0.0, 2.0 * pi, 401)
FIG4_RATIOS = (1.0, 2.0, 4.0)


class SweepError(ValueError):
    """Bad sweep configuration or a non-finite value on the grid."""


class SweepQuantity(Enum):
    CONCURRENCE_XY = "concurrence-xy"
    CONCURRENCE_XI = "concurrence-xi"
    CONCURRENCE_PSI3 = "concurrence-psi3"
    BELL_FIDELITIES = "bell-fidelities"
    ORACLE_CONCURRENCE = "oracle-concurrence"
    MEASURE_PROBABILITIES = "measure-probabilities"


@dataclass(frozen=True)
class AxisSpec:
    """One grid axis: `count` evenly spaced points from start to stop."""

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise SweepError(f"unknown axis {self.name!r}; "
                             f"choose from {', '.join(AXIS_NAMES)}")
        if self.count < 2:
            raise SweepError(f"axis {self.name}: need at least 2 points, "
                             f"got {self.count}")
        if not self.start < self.stop:
            raise SweepError(f"axis {self.name}: start must be below stop")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepConfig:
    quantity: SweepQuantity
    axes: tuple[AxisSpec, ...]
    fixed: Mapping[str, float] | None = None
    output_path: str | Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "quantity", SweepQuantity(self.quantity))
        axes = tuple(self.axes)
        if not 1 <= len(axes) <= 2:
            raise SweepError(f"need 1 or 2 axes, got {len(axes)}")
        if len(axes) == 2 and axes[0].name == axes[1].name:
            raise SweepError(f"duplicate axis {axes[0].name!r}")
        object.__setattr__(self, "axes", axes)
        fixed = dict(self.fixed or {})
        for key in fixed:
            if key not in _FIXED_NAMES:
                raise SweepError(f"unknown fixed parameter {key!r}; "
                                 f"choose from {', '.join(_FIXED_NAMES)}")
        object.__setattr__(self, "fixed", fixed)


@dataclass(frozen=True)
class SweepTable:
    """Evaluated grid: header (axes first, then components) and rows."""

    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    n_axes: int

    def column(self, name: str) -> np.ndarray:
        index = self.header.index(name)
        return np.array([row[index] for row in self.rows])


def _resolve(point: dict, name: str) -> float:
    """Value of a scaled variable at a grid point: direct, or coupling * t."""
    if name in point:
        return point[name]
    if name in ("Jt", "Jzt", "J0t"):
        coupling = name[:-1]
        if coupling in point and "t" in point:
            return point[coupling] * point["t"]
    raise SweepError(f"quantity needs {name!r}: provide it as an axis, fix it, "
                     f"or fix both {name[:-1] if name.endswith('t') else name!r} "
                     f"and t")


def _pipeline_records(point: dict):
    p = ClusterParams(J=point.get("J", 0.0), Jz=point.get("Jz", 0.0),
                      J0=point.get("J0", 0.0), h=point.get("h", 0.0),
                      hp=point.get("hp", 0.0))
    t = point.get("t")
    if t is None:
        raise SweepError("the pipeline quantities need the axis or fixed "
                         "parameter t")
    d = MeasurementDirection(theta=point.get("theta", 0.0),
                             phi=point.get("phi", 0.0))
    psi = evolve_oracle(build_hamiltonian(p), xplus_state(), t)
    return measure_pair(psi, Pair.SIDES, d)


def _eval_xy(point: dict) -> tuple[float, ...]:
    return (concurrence_xy(_resolve(point, "Jt"), _resolve(point, "Jzt"),
                           _resolve(point, "dphi"), 1.0),)


def _eval_xi(point: dict) -> tuple[float, ...]:
    return (concurrence_xi(_resolve(point, "Jt"), _resolve(point, "Jzt"), 1.0),)


def _eval_psi3(point: dict) -> tuple[float, ...]:
    return (concurrence_psi3(_resolve(point, "Jt"), _resolve(point, "Jzt"),
                             _resolve(point, "J0t"), 1.0),)


def _eval_bell(point: dict) -> tuple[float, ...]:
    return bell_fidelity_curves(_resolve(point, "J0t"), 1.0)


def _eval_oracle_concurrence(point: dict) -> tuple[float, ...]:
    records = _pipeline_records(point)
    values = []
    for r in records:
        if not r.reachable:
            raise SweepError(f"outcome {r.outcome.value} is unreachable "
                             f"(probability {r.probability:.3e}); its "
                             f"concurrence is undefined")
        values.append(concurrence_pure(r.post_state))
    return tuple(values)


def _eval_probabilities(point: dict) -> tuple[float, ...]:
    return tuple(r.probability for r in _pipeline_records(point))


_QUANTITIES: dict[SweepQuantity, tuple[tuple[str, ...], Callable]] = {
    SweepQuantity.CONCURRENCE_XY: (("C",), _eval_xy),
    SweepQuantity.CONCURRENCE_XI: (("C",), _eval_xi),
    SweepQuantity.CONCURRENCE_PSI3: (("C",), _eval_psi3),
    SweepQuantity.BELL_FIDELITIES: (("F1", "F2", "F3"), _eval_bell),
    SweepQuantity.ORACLE_CONCURRENCE: (("C_pp", "C_pm", "C_mp", "C_mm"),
                                       _eval_oracle_concurrence),
    SweepQuantity.MEASURE_PROBABILITIES: (("P_pp", "P_pm", "P_mp", "P_mm"),
                                          _eval_probabilities),
}


def run_sweep(cfg: SweepConfig) -> SweepTable:
    """Evaluate the grid; writes the CSV as well when output_path is set."""
    columns, evaluate = _QUANTITIES[cfg.quantity]
    grids = [axis.grid() for axis in cfg.axes]
    header = tuple(a.name for a in cfg.axes) + columns

    rows = []
    if len(grids) == 1:
        points = ((x,) for x in grids[0])
    else:
        points = ((x, y) for x in grids[0] for y in grids[1])
    for coords in points:
        point = dict(cfg.fixed)
        for axis, value in zip(cfg.axes, coords):
            point[axis.name] = float(value)
        values = evaluate(point)
        if not all(np.isfinite(values)):
            at = ", ".join(f"{a.name}={c:.6g}" for a, c in zip(cfg.axes, coords))
            raise SweepError(f"non-finite value at grid point ({at})")
        rows.append(tuple(float(c) for c in coords) + tuple(map(float, values)))

    table = SweepTable(header=header, rows=tuple(rows), n_axes=len(cfg.axes))
    if cfg.output_path is not None:
        write_csv(table, cfg.output_path)
    return table


def _fmt(x: float) -> str:
    return format(x + 0.0, ".12g")  # + 0.0 folds -0.0 into 0


def render_csv(table: SweepTable) -> str:
    lines = [",".join(table.header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def write_csv(table: SweepTable, path: str | Path) -> Path:
    path = Path(path)
    path.write_bytes(render_csv(table).encode("utf-8"))
    return path


def run_preset(name: str, dphi: float = 0.0,
               output_path: str | Path | None = None) -> SweepTable:
    """The three built-in grids: the concurrence map of the xy-plane
    initial state (fig2, at a chosen dphi), the three Bell-branch weights
    (fig3), and the --branch concurrence for (Jz - J)/J0 in {1, 2, 4}
    (fig4)."""
    if name == "fig2":
        cfg = SweepConfig(quantity=SweepQuantity.CONCURRENCE_XY,
                          axes=(AxisSpec("Jt", *FIG2_AXIS),
                                AxisSpec("Jzt", *FIG2_AXIS)),
                          fixed={"dphi": dphi}, output_path=output_path)
        return run_sweep(cfg)
    if name == "fig3":
        cfg = SweepConfig(quantity=SweepQuantity.BELL_FIDELITIES,
                          axes=(AxisSpec("J0t", *FIG3_AXIS),),
                          output_path=output_path)
        return run_sweep(cfg)
    if name == "fig4":
        grid = np.linspace(*FIG4_AXIS)
        header = ("J0t",) + tuple(f"C_r{r:g}" for r in FIG4_RATIOS)
        rows = tuple(
            (float(x),) + tuple(concurrence_psi3(0.0, r * x, x, 1.0)
                                for r in FIG4_RATIOS)
            for x in grid)
        table = SweepTable(header=header, rows=rows, n_axes=1)
        if output_path is not None:
            write_csv(table, output_path)
        return table
    raise SweepError(f"unknown preset {name!r}; choose from "
                     f"{', '.join(PRESET_NAMES)}")
