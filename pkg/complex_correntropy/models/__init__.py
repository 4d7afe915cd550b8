"""Data models for signals, filters and experiments."""

from complex_correntropy.models.experiment import (
    WSNR_CAP_DB,
    ExperimentConfig,
    MixtureComponent,
    NoiseModel,
    RunManifest,
    TraceKey,
    WsnrTrace,
)
from complex_correntropy.models.filter import FilterState, SolverOptions
from complex_correntropy.models.signal import ComplexSample, KernelConfig

__all__ = [
    "ComplexSample",
    "KernelConfig",
    "SolverOptions",
    "FilterState",
    "MixtureComponent",
    "NoiseModel",
    "ExperimentConfig",
    "TraceKey",
    "WsnrTrace",
    "RunManifest",
    "WSNR_CAP_DB",
]
