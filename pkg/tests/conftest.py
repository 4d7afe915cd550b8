"""Pytest configuration and shared fixtures."""

import logging
from pathlib import Path

import numpy as np
import pytest
from hypothesis import Verbosity, settings

from complex_correntropy.config import load_experiment_config
from complex_correntropy.models import ExperimentConfig, NoiseModel

# Configure Hypothesis for property-based testing
settings.register_profile("default", max_examples=100, verbosity=Verbosity.normal)
settings.register_profile("ci", max_examples=1000, verbosity=Verbosity.verbose)
settings.register_profile("dev", max_examples=10, verbosity=Verbosity.verbose)

# Load the default profile
settings.load_profile("default")

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture(autouse=True)
def _reset_warning_capture():
    """Undo logging.captureWarnings between tests.

    pytest restores warnings.showwarning after every test, but logging keeps
    believing capture is on, so a later captureWarnings(True) would be a no-op.
    """
    yield
    logging.captureWarnings(False)


@pytest.fixture
def rng():
    """Fixed-seed generator for example-based tests."""
    return np.random.default_rng(20160601)


@pytest.fixture
def benchmark_config_path():
    return CONFIG_DIR / "paper_fig2.json"


@pytest.fixture
def clean_config_path():
    return CONFIG_DIR / "clean.json"


@pytest.fixture
def benchmark_config(benchmark_config_path):
    """The bundled impulsive-noise benchmark."""
    return load_experiment_config(benchmark_config_path)


@pytest.fixture
def sample_config_data():
    """Small experiment config as it would appear in a JSON file."""
    return {
        "true_weights": [{"re": 1.0, "im": -2.0}, {"re": -3.0, "im": 4.0}],
        "n_iterations": 40,
        "n_trials": 3,
        "noise": NoiseModel.impulsive_default().model_dump(mode="json"),
        "sigma_list": [1.0, 4.0],
        "rls_lambda": 1.0,
        "reg_delta": 0.001,
        "seed": 11,
    }


@pytest.fixture
def small_config(sample_config_data):
    return ExperimentConfig.model_validate(sample_config_data)


@pytest.fixture
def write_csv(tmp_path):
    """Write CSV text to a file under tmp_path and return its path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
