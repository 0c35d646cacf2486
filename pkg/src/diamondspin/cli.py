"""Command line interface.

Subcommands:

    eigen    closed-form spectrum with residuals against the dense matrix
    evolve   amplitudes of the evolved +x product state
    measure  branch probabilities and post states of a pair measurement
    bell     build and execute a Bell-state preparation recipe
    verify   run every analytic-vs-oracle suite
    sweep    evaluate a quantity on a grid, write CSV (and optionally PNG)
    report   write all preset grids with rendered figures

Flags mirror the coupling symbols (--J --Jz --J0 --h --hp) plus the
measurement angles and time (--theta --phi --t).  Every subcommand
accepts --config FILE, a flat `key = value` text file supplying
defaults for its flags; explicit flags win.  Commands that write files
also write a `.manifest` key-value file sufficient to reproduce the
run.  Exit status: 0 on success, 1 when verification fails, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .entanglement import concurrence_pure
from .evolution import evolve_oracle, xplus_state
from .hamiltonian import ClusterParams, analytic_eigensystem, build_hamiltonian
from .hilbert import basis_label
from .measurement import (MeasurementDirection, Pair, PairOutcome,
                          measure_pair, sample_measurement)
from .protocols import (BellTarget, UnsupportedTargetError, execute_recipe,
                        prepare_bell_on_centrals)
from .sweep import (AxisSpec, PRESET_NAMES, SweepConfig, SweepError,
                    SweepQuantity, run_preset, run_sweep)
from .verify import run_all

_BRANCHES = {"plus-plus": PairOutcome.PLUS_PLUS,
             "plus-minus": PairOutcome.PLUS_MINUS,
             "minus-plus": PairOutcome.MINUS_PLUS,
             "minus-minus": PairOutcome.MINUS_MINUS}


def _fmt(x: float) -> str:
    return format(float(x) + 0.0, ".12g")  # + 0.0 folds -0.0 into 0


def _params_from(args) -> ClusterParams:
    return ClusterParams(J=args.J, Jz=args.Jz, J0=args.J0, h=args.h, hp=args.hp)


def _add_param_flags(parser, time: bool = False, angles: bool = False) -> None:
    for name, text in (("J", "central-pair xy exchange"),
                       ("Jz", "central-pair zz exchange"),
                       ("J0", "pair-to-pair Ising coupling"),
                       ("h", "side-pair field"),
                       ("hp", "central-pair field")):
        parser.add_argument(f"--{name}", type=float, default=0.0, help=text)
    if time:
        parser.add_argument("--t", type=float, default=0.0,
                            help="evolution time")
    if angles:
        parser.add_argument("--theta", type=float, default=0.0,
                            help="measurement polar angle")
        parser.add_argument("--phi", type=float, default=0.0,
                            help="measurement azimuth")


def _load_config(path: str) -> dict:
    """Flat `key = value` file; values are parsed as int, float, bool or
    left as strings."""
    values: dict = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SweepError(f"config line without '=': {raw!r}")
        key, _, text = line.partition("=")
        key = key.strip()
        text = text.strip()
        for parse in (int, float):
            try:
                values[key] = parse(text)
                break
            except ValueError:
                continue
        else:
            if text.lower() in ("true", "false"):
                values[key] = text.lower() == "true"
            else:
                values[key] = text
    return values


def _write_manifest(path: Path, command: str, args, outputs: list[Path]) -> None:
    lines = [f"command = {command}", f"tool_version = {__version__}"]
    for key in sorted(vars(args)):
        if key in ("func", "command"):
            continue
        value = getattr(args, key)
        if value is None:
            text = "none"
        elif isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = _fmt(value)
        elif isinstance(value, (list, tuple)):
            text = " ".join(str(v) for v in value)
        else:
            text = str(value)
        lines.append(f"{key} = {text}")
    lines.append("outputs = " + ", ".join(str(o) for o in outputs))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def cmd_eigen(args) -> int:
    p = _params_from(args)
    h = build_hamiltonian(p).total
    print(" n  energy            residual   state")
    for i, pair in enumerate(analytic_eigensystem(p), start=1):
        residual = float(np.linalg.norm(h @ pair.state - pair.energy * pair.state))
        print(f"{i:>2}  {_fmt(pair.energy):<17} {residual:<9.1e}  {pair.label}")
    return 0


def cmd_evolve(args) -> int:
    p = _params_from(args)
    psi = evolve_oracle(build_hamiltonian(p), xplus_state(), args.t)
    print("index  basis  re              im              probability")
    for i, amp in enumerate(psi):
        print(f"{i:>5}  {basis_label(i)}   {_fmt(amp.real):<15} "
              f"{_fmt(amp.imag):<15} {_fmt(abs(amp) ** 2)}")
    return 0


def cmd_measure(args) -> int:
    p = _params_from(args)
    d = MeasurementDirection(theta=args.theta, phi=args.phi)
    psi = evolve_oracle(build_hamiltonian(p), xplus_state(), args.t)
    records = measure_pair(psi, Pair(args.pair), d)
    print("outcome  probability      concurrence      post state")
    for record in records:
        if record.reachable:
            post = record.post_state
            concurrence = _fmt(concurrence_pure(post))
            amplitudes = "  ".join(
                f"{_fmt(a.real)}{a.imag:+.12g}i" for a in post)
        else:
            concurrence = "n/a"
            amplitudes = "unreachable"
        print(f"{record.outcome.value:<7}  {_fmt(record.probability):<15} "
              f"{concurrence:<15}  {amplitudes}")
    if args.seed is not None:
        drawn = sample_measurement(psi, Pair(args.pair), d, args.seed)
        print(f"sampled outcome (seed {args.seed}): {drawn.outcome.value}")
    return 0


def cmd_bell(args) -> int:
    p = _params_from(args)
    branch = _BRANCHES[args.branch] if args.branch else None
    recipe = prepare_bell_on_centrals(p, BellTarget(args.target),
                                      branch=branch, n=args.n, late=args.late)
    run = execute_recipe(recipe)
    print(f"target               = {recipe.target.value}")
    print(f"measure              = {recipe.pair_measured.value} pair")
    print(f"branch               = {recipe.branch.value}"
          + (" (or -+)" if len(recipe.success_outcomes) == 2 else ""))
    print(f"time                 = {_fmt(recipe.time)}")
    print(f"required hp          = {_fmt(recipe.required_hp)}  (n = {recipe.n})")
    print(f"direction theta      = {_fmt(recipe.direction.theta)}")
    print(f"direction phi        = {_fmt(recipe.direction.phi)}")
    print(f"expected probability = {_fmt(recipe.expected_probability)}")
    print(f"achieved probability = {_fmt(run.probability)}")
    print(f"achieved fidelity    = {_fmt(run.fidelity)}")
    print(f"achieved concurrence = {_fmt(run.concurrence)}")
    return 0


def cmd_verify(args) -> int:
    results = run_all(seed=args.seed, trials=args.trials)
    print("suite                  trials  worst        tolerance  status")
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += 0 if r.passed else 1
        print(f"{r.name:<22} {r.trials:>6}  {r.worst:<11.3e}  {r.tolerance:<9.0e}"
              f"  {status}")
    if failures:
        print(f"FAIL: {failures} suite(s) exceeded tolerance")
        return 1
    print("PASS: all suites within tolerance")
    return 0


def _parse_axis(text: str) -> AxisSpec:
    parts = text.split(":")
    if len(parts) != 4:
        raise SweepError(f"axis must be name:start:stop:count, got {text!r}")
    name, start, stop, count = parts
    return AxisSpec(name=name, start=float(start), stop=float(stop),
                    count=int(count))


def _parse_set(text: str) -> tuple[str, float]:
    if "=" not in text:
        raise SweepError(f"--set expects key=value, got {text!r}")
    key, _, value = text.partition("=")
    return key.strip(), float(value)


def cmd_sweep(args) -> int:
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    if args.preset:
        table = run_preset(args.preset, dphi=args.dphi, output_path=out)
    else:
        if not args.quantity or not args.axis:
            raise SweepError("provide --preset, or --quantity with --axis")
        axes = tuple(_parse_axis(a) for a in args.axis)
        fixed = dict(_parse_set(s) for s in args.set or [])
        cfg = SweepConfig(quantity=SweepQuantity(args.quantity), axes=axes,
                          fixed=fixed, output_path=out)
        table = run_sweep(cfg)
    outputs = [out]
    if args.render:
        from .figures import render_table
        outputs.append(render_table(table, out.with_suffix(".png")))
    _write_manifest(out.parent / (out.name + ".manifest"), "sweep", args,
                    outputs)
    for o in outputs:
        print(f"wrote {o}")
    return 0


def cmd_report(args) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    from .figures import render_table

    outputs = []
    for name in PRESET_NAMES:
        csv_path = outdir / f"{name}.csv"
        table = run_preset(name, dphi=args.dphi, output_path=csv_path)
        png_path = render_table(table, outdir / f"{name}.png")
        outputs.extend([csv_path, png_path])
    _write_manifest(outdir / "report.manifest", "report", args, outputs)
    for o in outputs:
        print(f"wrote {o}")
    return 0


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = argparse.ArgumentParser(
        prog="diamondspin",
        description="Exact diamond-cluster simulator: spectrum, evolution, "
                    "pair measurements, Bell-state preparation, sweeps.")
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    registry = {}

    def sub(name, handler, **kwargs):
        s = subparsers.add_parser(name, **kwargs)
        s.add_argument("--config", type=str, default=None,
                       help="flat key = value file with flag defaults")
        s.set_defaults(func=handler)
        registry[name] = s
        return s

    s = sub("eigen", cmd_eigen, help="closed-form spectrum and residuals")
    _add_param_flags(s)

    s = sub("evolve", cmd_evolve, help="evolved +x product state amplitudes")
    _add_param_flags(s, time=True)

    s = sub("measure", cmd_measure,
            help="measure one pair of the evolved +x state")
    _add_param_flags(s, time=True, angles=True)
    s.add_argument("--pair", choices=[p.value for p in Pair], default="sides")
    s.add_argument("--seed", type=int, default=None,
                   help="also draw one outcome from the Born distribution")

    s = sub("bell", cmd_bell, help="Bell-state preparation recipe")
    _add_param_flags(s)
    s.add_argument("--target", required=True,
                   choices=[t.value for t in BellTarget])
    s.add_argument("--branch", choices=sorted(_BRANCHES), default=None)
    s.add_argument("--n", type=int, default=None,
                   help="integer in hp t = pi n / 2 (parity set by target)")
    s.add_argument("--late", action="store_true",
                   help="mixed branch: measure at 3 pi / (2 J0)")

    s = sub("verify", cmd_verify, help="run all analytic-vs-oracle suites")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)

    s = sub("sweep", cmd_sweep, help="evaluate a quantity on a grid")
    s.add_argument("--preset", choices=PRESET_NAMES, default=None)
    s.add_argument("--quantity", choices=[q.value for q in SweepQuantity],
                   default=None)
    s.add_argument("--axis", action="append", default=None,
                   metavar="NAME:START:STOP:COUNT")
    s.add_argument("--set", action="append", default=None, metavar="KEY=VALUE",
                   help="fixed parameter")
    s.add_argument("--dphi", type=float, default=0.0,
                   help="relative azimuth for the fig2 preset")
    s.add_argument("--out", required=True, help="CSV output path")
    s.add_argument("--render", action="store_true",
                   help="also render a PNG next to the CSV")

    s = sub("report", cmd_report,
            help="write all preset grids with rendered figures")
    s.add_argument("--outdir", required=True)
    s.add_argument("--dphi", type=float, default=0.0)

    return parser, registry


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, registry = build_parser()

    # Apply config-file defaults before the real parse so explicit flags win.
    if "--config" in argv and argv.index("--config") + 1 < len(argv):
        config_path = argv[argv.index("--config") + 1]
        command = next((a for a in argv if not a.startswith("-")), None)
        if command in registry:
            try:
                values = _load_config(config_path)
            except (OSError, SweepError) as exc:
                print(f"error: cannot read config: {exc}", file=sys.stderr)
                return 2
            known = {a.dest for a in registry[command]._actions}
            registry[command].set_defaults(
                **{k: v for k, v in values.items() if k in known})

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedTargetError, SweepError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
