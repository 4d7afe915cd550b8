"""Synthetic system-identification experiments.

A trial draws complex Gaussian inputs, passes them through the true weights,
adds impulsive mixture noise and streams the samples through one recursive
MCCC filter per kernel size and one complex RLS filter, all starting from
zero weights. Every trial owns an RNG substream derived from
(seed, trial_index), so trials can run in any order or in parallel.
"""

import math
from collections.abc import Sequence
from typing import Any, Literal, Protocol

import numpy as np
from joblib import Parallel, delayed

from complex_correntropy.correntropy import as_complex_array
from complex_correntropy.exceptions import (
    ConfigurationError,
    CorrentropyError,
    DomainError,
    ExperimentError,
    ShapeError,
)
from complex_correntropy.filters import ComplexRLS, RecursiveMCCC
from complex_correntropy.logging_config import get_logger
from complex_correntropy.models.experiment import (
    WSNR_CAP_DB,
    ExperimentConfig,
    NoiseModel,
    TraceKey,
    WsnrTrace,
)
from complex_correntropy.models.filter import SolverOptions
from complex_correntropy.models.signal import ComplexArray

logger = get_logger(__name__)


class StreamingFilter(Protocol):
    name: str

    @property
    def sigma(self) -> float | None: ...

    @property
    def weights(self) -> ComplexArray: ...

    def step(self, x: Any, d: Any) -> ComplexArray: ...


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Independent generator for one trial, derived from (seed, trial_index)."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial_index]))


def sample_complex_gaussian_input(
    m: int, rng: np.random.Generator, unit_total_variance: bool = False
) -> ComplexArray:
    """Draw M complex inputs with independent N(0, 1) real and imaginary parts.

    With ``unit_total_variance`` both parts are scaled by 1/√2 so that E|x|² = 1.
    """
    if m < 1:
        raise ConfigurationError(f"input dimension must be >= 1, got {m}")
    x = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    if unit_total_variance:
        x = x / math.sqrt(2.0)
    return x


def _mixture_draws(model: NoiseModel, rng: np.random.Generator, size: int) -> np.ndarray:
    component = rng.choice(len(model.components), size=size, p=model.weights)
    return rng.normal(model.means[component], model.stds[component])


def sample_mixture_noise(model: NoiseModel, rng: np.random.Generator) -> complex:
    """Draw one complex noise sample; each part picks a mixture component independently."""
    if not isinstance(model, NoiseModel):
        raise ConfigurationError(f"expected a NoiseModel, got {type(model).__name__}")
    re, im = _mixture_draws(model, rng, 2)
    return complex(re, im)


def synthesize_dataset(
    cfg: ExperimentConfig, trial_index: int
) -> tuple[np.ndarray, ComplexArray, ComplexArray]:
    """Generate the inputs X (N x M), desired signal d and true weights of one trial.

    dₙ = w̄ᴴxₙ + ηₙ, with ηₙ = 0 when the config's ``clean`` flag is set.
    """
    rng = trial_rng(cfg.seed, trial_index)
    w_true = cfg.true_weight_array()
    n, m = cfg.n_iterations, cfg.order

    X = np.empty((n, m), dtype=np.complex128)
    d = np.empty(n, dtype=np.complex128)
    for i in range(n):
        X[i] = sample_complex_gaussian_input(m, rng, cfg.unit_total_variance)
        noise = 0.0 if cfg.clean else sample_mixture_noise(cfg.noise, rng)
        d[i] = np.vdot(w_true, X[i]) + noise
    return X, d, w_true


def wsnr_db(w_true: Any, w_est: Any) -> float:
    """Weight signal-to-noise ratio 10·log₁₀(w̄ᴴw̄ / (w̄−w)ᴴ(w̄−w)), capped at +300 dB.

    Raises:
        ShapeError: If the vectors differ in length
        DomainError: If the true weights are all zero
    """
    w_true = as_complex_array(w_true, "w_true")
    w_est = as_complex_array(w_est, "w_est")
    if w_true.shape != w_est.shape:
        raise ShapeError(f"weight vectors differ in shape: {w_true.shape} != {w_est.shape}")

    signal = float(np.real(np.vdot(w_true, w_true)))
    if signal == 0.0:
        raise DomainError("WSNR is undefined for an all-zero true weight vector")
    diff = w_true - w_est
    noise = float(np.real(np.vdot(diff, diff)))
    if noise == 0.0:
        return WSNR_CAP_DB
    return min(10.0 * math.log10(signal / noise), WSNR_CAP_DB)


def build_filters(cfg: ExperimentConfig) -> list[StreamingFilter]:
    """One MCCC filter per kernel size followed by the complex RLS baseline."""
    filters: list[StreamingFilter] = [
        RecursiveMCCC(cfg.order, SolverOptions(sigma=sigma, reg_delta=cfg.reg_delta))
        for sigma in cfg.sigma_list
    ]
    filters.append(ComplexRLS(cfg.order, cfg.rls_lambda, cfg.reg_delta))
    return filters


def trace_keys(cfg: ExperimentConfig) -> list[TraceKey]:
    """Series keys in output order."""
    return [TraceKey("mccc", sigma) for sigma in cfg.sigma_list] + [TraceKey("rls")]


def run_trial(cfg: ExperimentConfig, trial_index: int) -> WsnrTrace:
    """Run one Monte Carlo trial and record the WSNR of every filter after every sample.

    Raises:
        ExperimentError: If a filter fails; carries the trial and iteration indices
    """
    X, d, w_true = synthesize_dataset(cfg, trial_index)
    filters = build_filters(cfg)
    keys = trace_keys(cfg)
    curves = {key: np.empty(cfg.n_iterations) for key in keys}

    for i in range(cfg.n_iterations):
        for key, adaptive in zip(keys, filters, strict=True):
            try:
                w = adaptive.step(X[i], d[i])
            except CorrentropyError as e:
                raise ExperimentError(
                    f"{key.label} failed in trial {trial_index} at iteration {i + 1}: {e.message}",
                    trial_index=trial_index,
                    iteration=i + 1,
                    details=e.details,
                ) from e
            curves[key][i] = wsnr_db(w_true, w)

    logger.debug(
        f"trial {trial_index} finished: "
        + ", ".join(f"{k.label}={curves[k][-1]:.2f} dB" for k in keys)
    )
    return WsnrTrace(n_iterations=cfg.n_iterations, series=curves)


def average_traces(traces: Sequence[WsnrTrace], mode: Literal["db", "linear"] = "db") -> WsnrTrace:
    """Per-iteration average of several traces.

    ``db`` averages the dB values; ``linear`` averages the normalized weight-error
    power 10^(−WSNR/10) and converts the mean back to dB.
    """
    if not traces:
        raise DomainError("cannot average an empty list of traces")
    n_iterations = traces[0].n_iterations
    keys = traces[0].keys()

    averaged = {}
    for key in keys:
        stacked = np.stack([trace[key] for trace in traces])
        if mode == "db":
            averaged[key] = stacked.mean(axis=0)
        elif mode == "linear":
            averaged[key] = -10.0 * np.log10(np.mean(10.0 ** (-stacked / 10.0), axis=0))
        else:
            raise ConfigurationError(f"unknown averaging mode '{mode}'")
    return WsnrTrace(n_iterations=n_iterations, series=averaged)


def _run_trial_indexed(cfg: ExperimentConfig, trial_index: int) -> tuple[int, WsnrTrace]:
    return trial_index, run_trial(cfg, trial_index)


def monte_carlo_average(cfg: ExperimentConfig, n_jobs: int = 1) -> WsnrTrace:
    """Run every trial and average the learning curves.

    Trials may execute in parallel; results are reduced in trial-index order so
    the output does not depend on completion order.

    Raises:
        ExperimentError: With the index of the first failing trial
    """
    logger.info(
        f"Running {cfg.n_trials} trials of {cfg.n_iterations} iterations "
        f"(sigma={cfg.sigma_list}, lambda={cfg.rls_lambda}, seed={cfg.seed})"
    )
    if n_jobs == 1:
        results = [_run_trial_indexed(cfg, t) for t in range(cfg.n_trials)]
    else:
        results = Parallel(n_jobs=n_jobs)(
            delayed(_run_trial_indexed)(cfg, t) for t in range(cfg.n_trials)
        )

    traces = [trace for _, trace in sorted(results, key=lambda item: item[0])]
    averaged = average_traces(traces, cfg.averaging)
    logger.info("Monte Carlo run complete")
    return averaged
