"""Data models for system-identification experiments and their results."""

import math
from dataclasses import dataclass
from datetime import datetime
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from complex_correntropy.models.signal import (
    ComplexArray,
    ComplexSample,
    check_kernel_size,
    samples_to_array,
)

WSNR_CAP_DB = 300.0


class MixtureComponent(BaseModel):
    """One Gaussian component of a noise mixture."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    weight: float = Field(ge=0, le=1)
    mu: float = Field(default=0.0, allow_inf_nan=False)
    sigma_param: float = Field(gt=0, allow_inf_nan=False)


class NoiseModel(BaseModel):
    """Finite Gaussian mixture applied independently to real and imaginary parts.

    ``sigma_param`` is a standard deviation unless ``sigma_is_variance`` is set,
    in which case it is read as a variance.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    components: list[MixtureComponent] = Field(min_length=1)
    sigma_is_variance: bool = False

    @field_validator("components")
    @classmethod
    def validate_weights(cls, v: list[MixtureComponent]) -> list[MixtureComponent]:
        """Validate component weights sum to one."""
        total = math.fsum(c.weight for c in v)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"component weights must sum to 1, got {total!r}")
        return v

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.components])

    @property
    def means(self) -> np.ndarray:
        return np.array([c.mu for c in self.components])

    @property
    def stds(self) -> np.ndarray:
        """Per-component standard deviations under the configured convention."""
        params = np.array([c.sigma_param for c in self.components])
        return np.sqrt(params) if self.sigma_is_variance else params

    def part_variance(self) -> float:
        """Variance of one real part of the mixture."""
        w, mu, sd = self.weights, self.means, self.stds
        mean = float(np.dot(w, mu))
        return float(np.dot(w, sd**2 + mu**2)) - mean**2

    @classmethod
    def impulsive_default(cls) -> "NoiseModel":
        """0.95·N(0, 0.05) + 0.05·N(0, 5.0), the impulsive benchmark mixture."""
        return cls(
            components=[
                MixtureComponent(weight=0.95, mu=0.0, sigma_param=0.05),
                MixtureComponent(weight=0.05, mu=0.0, sigma_param=5.0),
            ]
        )


class ExperimentConfig(BaseModel):
    """Complete description of a Monte Carlo system-identification experiment."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    true_weights: list[ComplexSample] = Field(min_length=1)
    n_iterations: int = Field(ge=1)
    n_trials: int = Field(ge=1)
    noise: NoiseModel
    sigma_list: list[float] = Field(min_length=1)
    rls_lambda: float = Field(default=1.0, gt=0, le=1)
    reg_delta: float = Field(default=1e-3, ge=0, allow_inf_nan=False)
    seed: int = Field(default=0, ge=0)
    clean: bool = False
    unit_total_variance: bool = False
    averaging: Literal["db", "linear"] = "db"

    @field_validator("sigma_list")
    @classmethod
    def validate_sigma_list(cls, v: list[float]) -> list[float]:
        """Validate every kernel size is in range and appears once."""
        for sigma in v:
            check_kernel_size(sigma)
        duplicates = sorted({sigma for sigma in v if v.count(sigma) > 1})
        if duplicates:
            raise ValueError(f"kernel sizes must be distinct, repeated: {duplicates}")
        return v

    @model_validator(mode="after")
    def validate_true_weights(self) -> "ExperimentConfig":
        """Validate the true weight vector has nonzero energy."""
        if all(w.modulus_squared == 0.0 for w in self.true_weights):
            raise ValueError("true_weights must not be all zero")
        return self

    @property
    def order(self) -> int:
        """Filter length M."""
        return len(self.true_weights)

    def true_weight_array(self) -> ComplexArray:
        return samples_to_array(self.true_weights)


@dataclass(frozen=True, order=True)
class TraceKey:
    """Identifies one learning curve: an algorithm and, for MCCC, its kernel size."""

    algorithm: str
    sigma: float | None = None

    @property
    def label(self) -> str:
        if self.sigma is None:
            return self.algorithm
        return f"{self.algorithm}(sigma={self.sigma:g})"


@dataclass(frozen=True)
class WsnrTrace:
    """Per-iteration WSNR curves in dB, one series per filter."""

    n_iterations: int
    series: dict[TraceKey, np.ndarray]

    def __post_init__(self) -> None:
        for key, values in self.series.items():
            if values.shape != (self.n_iterations,):
                raise ValueError(
                    f"series {key.label} has shape {values.shape}, expected ({self.n_iterations},)"
                )

    def keys(self) -> list[TraceKey]:
        return list(self.series)

    def __getitem__(self, key: TraceKey) -> np.ndarray:
        return self.series[key]

    def steady_state(self, key: TraceKey, last: int = 50) -> float:
        """Mean WSNR over the final ``last`` iterations of one series."""
        values = self.series[key]
        return float(np.mean(values[-min(last, len(values)) :]))


class RunManifest(BaseModel):
    """Record of one ``identify`` run, sufficient to reproduce it."""

    config_echo: ExperimentConfig
    tool_version: str
    started: datetime
    finished: datetime
    outputs: list[str]
