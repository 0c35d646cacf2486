"""Grid sweeps: validation, determinism, CSV format, presets."""

from math import pi

import numpy as np
import pytest

from diamondspin import (
    AxisSpec,
    ClusterParams,
    SweepConfig,
    SweepError,
    concurrence_psi3,
    concurrence_pure,
    concurrence_xi,
    concurrence_xy,
    evolve_stationary_sides,
    render_csv,
    run_preset,
    run_sweep,
    write_csv,
)

from support import xy_plane_init


def test_axis_validation():
    AxisSpec("Jt", 0.0, 1.0, 2)
    with pytest.raises(SweepError, match="unknown axis"):
        AxisSpec("bogus", 0.0, 1.0, 5)
    with pytest.raises(SweepError, match="at least 2"):
        AxisSpec("Jt", 0.0, 1.0, 1)
    with pytest.raises(SweepError, match="below stop"):
        AxisSpec("Jt", 1.0, 1.0, 5)


def test_config_validation():
    axis = AxisSpec("Jt", 0.0, 1.0, 3)
    other = AxisSpec("Jzt", 0.0, 1.0, 3)
    with pytest.raises(SweepError, match="1 or 2 axes"):
        SweepConfig(quantity="concurrence-xy", axes=())
    with pytest.raises(SweepError, match="1 or 2 axes"):
        SweepConfig(quantity="concurrence-xy",
                    axes=(axis, other, AxisSpec("t", 0.0, 1.0, 3)))
    with pytest.raises(SweepError, match="duplicate"):
        SweepConfig(quantity="concurrence-xy", axes=(axis, axis))
    with pytest.raises(SweepError, match="unknown fixed"):
        SweepConfig(quantity="concurrence-xy", axes=(axis,),
                    fixed={"bogus": 1.0})


def test_missing_requirement_is_reported():
    cfg = SweepConfig(quantity="concurrence-xy",
                      axes=(AxisSpec("Jt", 0.0, 2.0, 3),),
                      fixed={"Jzt": 1.0})
    with pytest.raises(SweepError, match="dphi"):
        run_sweep(cfg)


def test_rows_follow_lexicographic_axis_order():
    cfg = SweepConfig(quantity="concurrence-xy",
                      axes=(AxisSpec("Jt", 0.0, 2.0, 3),
                            AxisSpec("Jzt", 0.0, 3.0, 4)),
                      fixed={"dphi": 0.0})
    table = run_sweep(cfg)
    assert table.header == ("Jt", "Jzt", "C")
    assert len(table.rows) == 12
    coords = [(row[0], row[1]) for row in table.rows]
    assert coords == sorted(coords)
    for jt, jzt, c in table.rows:
        assert c == pytest.approx(concurrence_xy(jt, jzt, 0.0, 1.0))


def test_scaled_axes_resolve_from_coupling_and_time():
    cfg = SweepConfig(quantity="concurrence-xi",
                      axes=(AxisSpec("t", 0.5, 2.5, 5),),
                      fixed={"J": 0.4, "Jz": 1.1})
    table = run_sweep(cfg)
    for t, c in table.rows:
        assert c == pytest.approx(concurrence_xi(0.4 * t, 1.1 * t, 1.0))


def test_pipeline_quantities_match_direct_measurement():
    cfg = SweepConfig(quantity="measure-probabilities",
                      axes=(AxisSpec("t", 0.3, 2.3, 3),),
                      fixed={"J": 1.2, "Jz": 0.5, "J0": 0.8, "h": 0.4,
                             "hp": 0.1, "theta": 1.0, "phi": 2.0})
    table = run_sweep(cfg)
    assert table.header == ("t", "P_pp", "P_pm", "P_mp", "P_mm")
    for row in table.rows:
        assert sum(row[1:]) == pytest.approx(1.0, abs=1e-12)
    oracle = SweepConfig(quantity="oracle-concurrence", axes=cfg.axes,
                         fixed=cfg.fixed)
    for row in run_sweep(oracle).rows:
        assert all(0.0 <= c <= 1.0 + 1e-12 for c in row[1:])


def test_unreachable_branch_fails_loudly():
    # theta = pi/2, phi = h t - pi and J0 t = 2 pi empty the ++ branch.
    cfg = SweepConfig(quantity="oracle-concurrence",
                      axes=(AxisSpec("t", 2.0 * pi - 0.1, 2.0 * pi, 2),),
                      fixed={"J": 0.8, "Jz": 1.3, "J0": 1.0, "h": 0.0,
                             "theta": 0.5 * pi, "phi": pi})
    with pytest.raises(SweepError, match="unreachable"):
        run_sweep(cfg)


def test_csv_rendering_is_byte_stable(tmp_path):
    cfg = SweepConfig(quantity="bell-fidelities",
                      axes=(AxisSpec("J0t", 0.0, 2.0 * pi, 11),))
    text = render_csv(run_sweep(cfg))
    assert text == render_csv(run_sweep(cfg))
    assert text.startswith("J0t,F1,F2,F3\n")
    assert text.endswith("\n") and "\r" not in text
    assert len(text.splitlines()) == 12

    path_a = write_csv(run_sweep(cfg), tmp_path / "a.csv")
    path_b = write_csv(run_sweep(cfg), tmp_path / "b.csv")
    assert path_a.read_bytes() == path_b.read_bytes()
    assert path_a.read_bytes().decode("utf-8") == text


def test_csv_uses_twelve_significant_digits():
    cfg = SweepConfig(quantity="concurrence-xy",
                      axes=(AxisSpec("Jt", 0.0, 1.0, 3),),
                      fixed={"Jzt": 1.0 / 3.0, "dphi": 0.0})
    lines = render_csv(run_sweep(cfg)).splitlines()
    assert lines[2].startswith("0.5,")
    value = lines[2].split(",")[1]
    assert value == format(concurrence_xy(0.5, 1.0 / 3.0, 0.0, 1.0), ".12g")


def test_output_file_written_by_run_sweep(tmp_path):
    out = tmp_path / "grid.csv"
    cfg = SweepConfig(quantity="concurrence-xi",
                      axes=(AxisSpec("Jt", 0.0, 1.0, 3),),
                      fixed={"Jzt": 0.0}, output_path=out)
    run_sweep(cfg)
    assert out.exists()
    assert out.read_text(encoding="utf-8").startswith("Jt,C\n")


def test_fig2_preset_grid_and_values():
    table = run_preset("fig2", dphi=0.0)
    assert table.header == ("Jt", "Jzt", "C")
    assert len(table.rows) == 81 * 81
    jt = table.column("Jt")
    assert jt[0] == 0.0 and jt[-1] == pytest.approx(4.0 * pi)
    c = table.column("C")
    # maximal exactly on (Jzt - Jt) = pi, which the grid hits
    assert np.max(c) == pytest.approx(1.0, abs=1e-12)
    # the diagonal Jt = Jzt is dark at dphi = 0
    diag = [row[2] for row in table.rows if row[0] == row[1]]
    assert np.max(diag) < 1e-12


def test_fig2_preset_spot_checked_against_the_full_pipeline():
    table = run_preset("fig2", dphi=0.7)
    rng = np.random.default_rng(60)
    rows = [table.rows[i] for i in rng.integers(0, len(table.rows), size=20)]
    for jt, jzt, c in rows:
        # realize Jt and Jzt with t = 1 and evolve the xy-plane start
        p = ClusterParams(J=jt, Jz=jzt)
        state = evolve_stationary_sides(p, xy_plane_init(0.7, 0.0), 1.0)
        assert c == pytest.approx(concurrence_pure(state), abs=1e-10)


def test_fig3_preset_curves():
    table = run_preset("fig3")
    assert table.header == ("J0t", "F1", "F2", "F3")
    assert len(table.rows) == 201
    for row in table.rows:
        assert row[1] + row[2] + row[3] == pytest.approx(1.0, abs=1e-12)
    start, end = table.rows[0], table.rows[-1]
    assert start[1:] == pytest.approx((0.0, 0.0, 1.0), abs=1e-12)
    assert end[1:] == pytest.approx((0.0, 0.0, 1.0), abs=1e-12)  # period 2 pi
    middle = table.rows[100]
    assert middle[0] == pytest.approx(pi)
    assert middle[1] == pytest.approx(0.5, abs=1e-12)
    assert middle[2] == pytest.approx(0.0, abs=1e-12)
    assert middle[3] == pytest.approx(0.5, abs=1e-12)


def test_fig4_preset_saturates_faster_at_larger_ratio():
    table = run_preset("fig4")
    assert table.header == ("J0t", "C_r1", "C_r2", "C_r4")
    assert len(table.rows) == 401
    x = table.column("J0t")
    crossings = []
    for name, ratio in (("C_r1", 1.0), ("C_r2", 2.0), ("C_r4", 4.0)):
        c = table.column(name)
        assert np.allclose(c, [concurrence_psi3(0.0, ratio * v, v, 1.0)
                               for v in x], atol=1e-12)
        crossings.append(x[np.argmax(c >= 0.99)])
    assert crossings[0] > crossings[1] > crossings[2]


def test_unknown_preset():
    with pytest.raises(SweepError, match="unknown preset"):
        run_preset("fig9")
