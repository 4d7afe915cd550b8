"""Unit tests for the CLI commands."""

import csv
import json
import math

import numpy as np
import pytest
from typer.testing import CliRunner

from complex_correntropy.cli import app
from complex_correntropy.correntropy import complex_correntropy
from complex_correntropy.filters import mccc_batch_fixed_point
from complex_correntropy.models import KernelConfig, SolverOptions

runner = CliRunner()


def regression_csv(X, d):
    m = X.shape[1]
    header = [f"x{k}_{part}" for k in range(1, m + 1) for part in ("re", "im")] + ["d_re", "d_im"]
    lines = [",".join(header)]
    for row, target in zip(X, d, strict=True):
        values = [v for x in row for v in (x.real, x.imag)] + [target.real, target.imag]
        lines.append(",".join(repr(float(v)) for v in values))
    return "\n".join(lines) + "\n"


def test_version():
    """Test that version prints the package version."""
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.stdout


def test_help_lists_commands():
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for command in ("identify", "correntropy", "batch-solve"):
        assert command in result.stdout


class TestCorrentropyCommand:
    def test_identical_complex_sequences(self, write_csv):
        path = write_csv("same.csv", "x_re,x_im,y_re,y_im\n1,2,1,2\n-0.5,3,-0.5,3\n0,0,0,0\n")
        result = runner.invoke(app, ["correntropy", str(path), "--sigma", "1", "--mode", "complex"])

        assert result.exit_code == 0
        assert float(result.stdout.strip()) == pytest.approx(0.0795775, abs=1e-7)

    def test_matches_library_value_exactly(self, write_csv):
        c1 = [0.3 + 1.1j, -2.0 + 0.5j, 1.7 - 0.2j]
        c2 = [0.1 - 0.4j, -1.0 + 0.0j, 2.2 + 1.0j]
        rows = [f"{a.real!r},{a.imag!r},{b.real!r},{b.imag!r}" for a, b in zip(c1, c2, strict=True)]
        path = write_csv("pairs.csv", "x_re,x_im,y_re,y_im\n" + "\n".join(rows) + "\n")

        result = runner.invoke(app, ["correntropy", str(path), "--sigma", "0.8"])

        assert result.exit_code == 0
        assert float(result.stdout.strip()) == complex_correntropy(c1, c2, KernelConfig(sigma=0.8))

    def test_real_mode(self, write_csv):
        path = write_csv("real.csv", "x,y\n0,0\n2,0\n")
        result = runner.invoke(app, ["correntropy", str(path), "--sigma", "1", "--mode", "real"])

        assert result.exit_code == 0
        assert float(result.stdout.strip()) == pytest.approx(0.192936, abs=1e-6)

    def test_malformed_row(self, write_csv):
        path = write_csv("bad.csv", "x,y\n0,0\nabc,1\n")
        result = runner.invoke(app, ["correntropy", str(path), "--sigma", "1", "--mode", "real"])

        assert result.exit_code == 2
        assert "line 3" in result.output

    @pytest.mark.parametrize("sigma", ["0", "--sigma=-1"])
    def test_non_positive_sigma(self, write_csv, sigma):
        path = write_csv("real.csv", "x,y\n0,0\n")
        args = ["correntropy", str(path), "--mode", "real"]
        args += [sigma] if sigma.startswith("--") else ["--sigma", sigma]
        result = runner.invoke(app, args)

        assert result.exit_code == 2
        assert "--sigma" in result.output

    @pytest.mark.parametrize("sigma", ["1e-170", "1e200"])
    def test_sigma_out_of_range(self, write_csv, sigma):
        path = write_csv("same.csv", "x_re,x_im,y_re,y_im\n1,2,1,2\n")
        result = runner.invoke(app, ["correntropy", str(path), "--sigma", sigma])

        assert result.exit_code == 2
        assert "--sigma" in result.output
        assert "Traceback" not in result.output

    def test_largest_sigma_is_finite(self, write_csv):
        path = write_csv("same.csv", "x_re,x_im,y_re,y_im\n1,2,1,2\n-0.5,3,-0.5,3\n")
        result = runner.invoke(app, ["correntropy", str(path), "--sigma", "1e100"])

        assert result.exit_code == 0
        value = float(result.stdout.strip())
        assert value > 0.0
        assert value == pytest.approx(1.0 / (4.0 * math.pi * 1e200), rel=1e-12)

    def test_unknown_mode(self, write_csv):
        path = write_csv("real.csv", "x,y\n0,0\n")
        result = runner.invoke(app, ["correntropy", str(path), "--sigma", "1", "--mode", "polar"])
        assert result.exit_code == 2

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["correntropy", str(tmp_path / "none.csv"), "--sigma", "1"])
        assert result.exit_code == 2
        assert "not found" in result.output


class TestBatchSolveCommand:
    def test_noiseless_recovery(self, tmp_path, write_csv, rng):
        w_true = np.array([1 - 2j, -3 + 4j])
        X = rng.standard_normal((25, 2)) + 1j * rng.standard_normal((25, 2))
        path = write_csv("data.csv", regression_csv(X, X @ w_true.conj()))
        out = tmp_path / "solution.json"

        result = runner.invoke(app, ["batch-solve", str(path), "--sigma", "2", "--out", str(out)])

        assert result.exit_code == 0
        payload = json.loads(out.read_text(encoding="utf-8"))
        weights = np.array([complex(w["re"], w["im"]) for w in payload["weights"]])
        np.testing.assert_allclose(weights, w_true, atol=1e-8)
        assert payload["converged"] is True
        assert payload["iterations"] >= 1
        assert payload["sigma"] == 2.0

    def test_outlier_dataset_matches_library(self, tmp_path, write_csv):
        x = np.array([1.0, 1j, -1.0, 1 + 1j, 1.0])
        d = x * (1 + 2j) + np.array([0.01, -0.01j, 0.005, -0.005 + 0.005j, 20.0])
        X = x[:, np.newaxis]
        path = write_csv("scalar.csv", regression_csv(X, d))
        out = tmp_path / "solution.json"

        result = runner.invoke(
            app, ["batch-solve", str(path), "--sigma", "1", "--out", str(out), "--max-iter", "200"]
        )

        assert result.exit_code == 0
        payload = json.loads(out.read_text(encoding="utf-8"))
        expected = mccc_batch_fixed_point(X, d, SolverOptions(sigma=1.0, max_iter=200, reg_delta=0.0))
        weight = complex(payload["weights"][0]["re"], payload["weights"][0]["im"])
        assert weight == pytest.approx(complex(expected.weights[0]), abs=1e-12)
        assert abs(weight - (1 - 2j)) < 1e-2

    def test_underdetermined(self, tmp_path, write_csv):
        path = write_csv("short.csv", "x1_re,x1_im,x2_re,x2_im,d_re,d_im\n1,0,0,1,1,0\n")
        result = runner.invoke(
            app, ["batch-solve", str(path), "--sigma", "1", "--out", str(tmp_path / "o.json")]
        )
        assert result.exit_code == 2

    def test_singular_data(self, tmp_path, write_csv):
        zeros = "0,0,0,0,1,0\n" * 3
        path = write_csv("zeros.csv", "x1_re,x1_im,x2_re,x2_im,d_re,d_im\n" + zeros)
        result = runner.invoke(
            app, ["batch-solve", str(path), "--sigma", "1", "--out", str(tmp_path / "o.json")]
        )
        assert result.exit_code == 3
        assert "singular" in result.output.lower()

    @pytest.mark.parametrize("sigma", ["0", "1e200"])
    def test_invalid_sigma(self, tmp_path, write_csv, sigma):
        path = write_csv("data.csv", "x1_re,x1_im,d_re,d_im\n1,0,1,0\n")
        result = runner.invoke(
            app, ["batch-solve", str(path), "--sigma", sigma, "--out", str(tmp_path / "o.json")]
        )
        assert result.exit_code == 2
        assert "--sigma" in result.output

    def test_invalid_solver_options(self, tmp_path, write_csv):
        path = write_csv("data.csv", "x1_re,x1_im,d_re,d_im\n1,0,1,0\n")
        result = runner.invoke(
            app,
            ["batch-solve", str(path), "--sigma", "1", "--out", str(tmp_path / "o.json"), "--tol", "0"],
        )
        assert result.exit_code == 2
        assert "tol" in result.output


class TestIdentifyCommand:
    def test_writes_results(self, tmp_path, sample_config_data):
        config = tmp_path / "small.json"
        config.write_text(json.dumps(sample_config_data), encoding="utf-8")
        out = tmp_path / "run"

        result = runner.invoke(app, ["identify", str(config), "--out", str(out)])

        assert result.exit_code == 0, result.output
        with open(out / "wsnr.csv", newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["iteration", "algorithm", "sigma", "wsnr_db"]
        assert len(rows) == 1 + 40 * 3
        assert rows[1][:3] == ["1", "mccc", "1"]
        assert rows[2][:3] == ["1", "mccc", "4"]
        assert rows[3][:3] == ["1", "rls", ""]
        assert rows[-1][:2] == ["40", "rls"]

        manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
        assert manifest["outputs"] == ["wsnr.csv", "manifest.json"]
        assert manifest["config_echo"]["seed"] == 11
        assert manifest["config_echo"]["averaging"] == "db"
        assert manifest["tool_version"] == "0.1.0"

    def test_seed_override(self, tmp_path, sample_config_data):
        config = tmp_path / "small.json"
        config.write_text(json.dumps(sample_config_data), encoding="utf-8")
        out = tmp_path / "run"

        result = runner.invoke(app, ["identify", str(config), "--out", str(out), "--seed", "99"])

        assert result.exit_code == 0
        manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
        assert manifest["config_echo"]["seed"] == 99

    def test_invalid_config(self, tmp_path, sample_config_data):
        config = tmp_path / "bad.json"
        config.write_text(json.dumps(dict(sample_config_data, n_trials=0)), encoding="utf-8")

        result = runner.invoke(app, ["identify", str(config), "--out", str(tmp_path / "run")])

        assert result.exit_code == 2
        assert "n_trials" in result.output

    def test_unparseable_config(self, tmp_path):
        config = tmp_path / "broken.json"
        config.write_text('{\n  "seed": [1, 2}\n}\n', encoding="utf-8")

        result = runner.invoke(app, ["identify", str(config), "--out", str(tmp_path / "run")])

        assert result.exit_code == 2
        assert "line 2" in result.output

    def test_numeric_failure(self, tmp_path, sample_config_data):
        config = tmp_path / "singular.json"
        config.write_text(json.dumps(dict(sample_config_data, reg_delta=0.0)), encoding="utf-8")

        result = runner.invoke(app, ["identify", str(config), "--out", str(tmp_path / "run")])

        assert result.exit_code == 3
        assert "trial 0" in result.output
        assert "iteration 1" in result.output
