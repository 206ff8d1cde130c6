import csv
import json

import numpy as np
import pytest

from hardydual.cli import main
from hardydual.corpus import mass_single_trace


def _write_config(path, **overrides):
    config = {
        "label": "test",
        "seed": 7,
        "grid": 1024,
        "degree": 40,
        "symbol": {"kind": "coefficients", "entries": {}},
        "masses": [{"point": [0.5, 0.0], "weight": 3.0}],
        "n_max": 12,
        "rho_list": [0.5],
        "N_list": [1],
        "studies": ["duality"],
    }
    config.update(overrides)
    path.write_text(json.dumps(config))
    return config


def _read_csv(path):
    with open(path, newline="") as handle:
        return list(csv.DictReader(handle))


def test_duality_study_closed_form(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg)
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["all_passed"] is True
    rows = _read_csv(out / "duality.csv")
    assert float(rows[0]["residual"]) < 1e-9


def test_non_contractive_symbol_exits_2(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg, symbol={"kind": "expression", "formula": "1.5*conj(t)"})
    assert main(["run", str(cfg), "--out", str(tmp_path / "o")]) == 2


def test_unknown_key_exits_2(tmp_path):
    cfg = tmp_path / "c.json"
    config = _write_config(cfg)
    config["surprise"] = 1
    cfg.write_text(json.dumps(config))
    assert main(["run", str(cfg)]) == 2


def test_touching_symbol_exits_3(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg, symbol={"kind": "expression", "formula": "conj(t)"},
                  masses=[], N_list=[0], grid=512, degree=8)
    with pytest.warns(UserWarning):  # |R| = 1 everywhere: flagged, then fatal
        assert main(["run", str(cfg), "--out", str(tmp_path / "o")]) == 3


def test_gate_failure_exits_4_report_written(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg)
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out), "--tol-gate", "1e-30"]) == 4
    summary = json.loads((out / "summary.json").read_text())
    assert summary["all_passed"] is False
    assert (out / "duality.csv").exists()


def test_asymptotics_csv_matches_closed_form(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg, studies=["asymptotics"])
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out)]) == 0
    rows = _read_csv(out / "asymptotics.csv")
    assert len(rows) == 13
    for row in rows:
        expected = mass_single_trace(int(row["n"]))
        assert abs(float(row["kernel_value"]) - expected) < 1e-10


def test_determinism_byte_identical(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg, studies=["asymptotics", "duality", "sandwich", "tau"],
                  grid=512, degree=24, n_max=6)
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["run", str(cfg), "--out", str(out1)]) == 0
    assert main(["run", str(cfg), "--out", str(out2)]) == 0
    for name in ("asymptotics.csv", "duality.csv", "sandwich.csv", "tau.csv",
                 "summary.json"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), name


def test_convention_flag_printed(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg)
    out = tmp_path / "out"
    code = main(["run", str(cfg), "--out", str(out), "--convention", "printed",
                 "--tol-gate", "1.0"])
    assert code == 0
    rows = _read_csv(out / "duality.csv")
    assert float(rows[0]["residual"]) > 0.05  # printed pairing breaks the identity
    summary = json.loads((out / "summary.json").read_text())
    assert summary["convention"] == "printed"


def test_convergence_study(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(
        cfg,
        studies=["convergence"],
        n_max=8,
        rho_list=[0.5, 0.9, 0.99],
        N_list=[0, 1],
        convergence={"grids": [256, 512, 1024], "degrees": [12, 24, 40]},
    )
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out)]) == 0
    refinement = _read_csv(out / "convergence_refinement.csv")
    residuals = [float(r["identity_residual"]) for r in refinement]
    assert residuals[-1] <= 2 * max(residuals[0], 1e-12)
    rho_rows = _read_csv(out / "convergence_rho.csv")
    rho_values = [float(r["k_scaled"]) for r in rho_rows]
    assert rho_values == sorted(rho_values)  # K increases toward K(alpha) as rho -> 1
    cut_rows = _read_csv(out / "convergence_cutoff.csv")
    cut_values = [float(r["k_cutoff"]) for r in cut_rows]
    assert cut_values == sorted(cut_values, reverse=True)  # decreases toward K(alpha)
    summary = json.loads((out / "summary.json").read_text())
    assert summary["scalars"]["convergence"]["rho_sweep_monotone"] is True
    assert summary["scalars"]["convergence"]["cutoff_sweep_monotone"] is True


def test_full_study_list_passes(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(
        cfg,
        studies=["asymptotics", "duality", "sandwich", "theorem", "tau"],
        grid=1024,
        degree=32,
        n_max=8,
        symbol={"kind": "expression", "formula": "0.3*conj(t)"},
        masses=[{"point": [0.5, 0.0], "weight": 1.0},
                {"point": [-0.3333333333333333, 0.0], "weight": 0.8}],
        N_list=[1],
    )
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    gate_names = {g["name"] for g in summary["gates"]}
    assert {"duality.identity_residual", "tau.unitarity",
            "theorem.membership_residual"} <= gate_names


def test_symbol_from_sample_file(tmp_path):
    nodes = np.exp(2j * np.pi * np.arange(512) / 512)
    values = 0.6 * np.conj(nodes)
    samples = [[float(v.real), float(v.imag)] for v in values]
    sample_path = tmp_path / "symbol.json"
    sample_path.write_text(json.dumps(samples))
    cfg = tmp_path / "c.json"
    _write_config(cfg, grid=512, degree=24,
                  symbol={"kind": "samples", "path": str(sample_path)},
                  masses=[], N_list=[0])
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out)]) == 0
    rows = _read_csv(out / "duality.csv")
    assert abs(float(rows[0]["kernel_shifted"]) - 1.25) < 1e-10


def test_symbol_inline_samples_and_overrides(tmp_path):
    nodes = np.exp(2j * np.pi * np.arange(256) / 256)
    values = 0.6 * np.conj(nodes)
    samples = [[float(v.real), float(v.imag)] for v in values]
    cfg = tmp_path / "c.json"
    _write_config(cfg, grid=1024, degree=40,
                  symbol={"kind": "samples", "values": samples},
                  masses=[], N_list=[0])
    out = tmp_path / "out"
    # --grid must override the config so the 256 samples fit
    assert main(["run", str(cfg), "--out", str(out), "--grid", "256",
                 "--degree", "24"]) == 0
    rows = _read_csv(out / "duality.csv")
    assert abs(float(rows[0]["kernel_shifted"]) - 1.25) < 1e-10


def test_wrong_sample_count_exits_2(tmp_path):
    cfg = tmp_path / "c.json"
    _write_config(cfg, grid=512, symbol={"kind": "samples", "values": [[0.1, 0.0]] * 17},
                  masses=[], N_list=[0])
    assert main(["run", str(cfg)]) == 2


def test_env_thread_count(tmp_path, monkeypatch):
    monkeypatch.setenv("HARDYDUAL_THREADS", "4")
    cfg = tmp_path / "c.json"
    _write_config(cfg, studies=["asymptotics", "duality"], grid=512, degree=24,
                  n_max=8)
    out = tmp_path / "out"
    assert main(["run", str(cfg), "--out", str(out)]) == 0
    assert (out / "asymptotics.csv").exists()
