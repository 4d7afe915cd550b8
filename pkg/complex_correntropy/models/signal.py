"""Data models for complex samples and kernel configuration."""

import math
from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator

# Weight vectors, inputs and desired signals travel as 1-D complex128 arrays
ComplexArray = npt.NDArray[np.complex128]
RealArray = npt.NDArray[np.float64]

# Kernel sizes outside this range overflow or underflow σ² and the normalizers
KERNEL_SIZE_MIN = 1e-100
KERNEL_SIZE_MAX = 1e100


def check_kernel_size(sigma: float) -> float:
    """Validate a kernel size lies in [KERNEL_SIZE_MIN, KERNEL_SIZE_MAX].

    Raises:
        ValueError: If sigma is not finite or falls outside the range
    """
    if not (math.isfinite(sigma) and KERNEL_SIZE_MIN <= sigma <= KERNEL_SIZE_MAX):
        raise ValueError(
            f"kernel size must lie in [{KERNEL_SIZE_MIN:g}, {KERNEL_SIZE_MAX:g}], got {sigma}"
        )
    return sigma


class ComplexSample(BaseModel):
    """One complex scalar stored as an ordered pair of real components."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    re: float
    im: float

    @field_validator("re", "im")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinite components."""
        if not math.isfinite(v):
            raise ValueError(f"component must be finite, got {v}")
        return v

    @property
    def modulus_squared(self) -> float:
        """Return re² + im² computed from the fields."""
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        """Convert to a Python complex number."""
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, value: complex) -> "ComplexSample":
        """Build a sample from a Python or numpy complex number."""
        value = complex(value)
        return cls(re=value.real, im=value.imag)


class KernelConfig(BaseModel):
    """Gaussian kernel bandwidth and its derived normalization constants."""

    model_config = ConfigDict(frozen=True)

    sigma: float = Field(gt=0, description="Kernel bandwidth, same units as the data")

    @field_validator("sigma")
    @classmethod
    def validate_sigma(cls, v: float) -> float:
        """Validate sigma lies in the supported range."""
        return check_kernel_size(v)

    @property
    def real_normalizer(self) -> float:
        """1/(√(2π)·σ), the peak of the real Gaussian kernel."""
        return 1.0 / (math.sqrt(2.0 * math.pi) * self.sigma)

    @property
    def complex_normalizer(self) -> float:
        """1/(2πσ²), the peak of the complex Gaussian kernel."""
        return 1.0 / (2.0 * math.pi * self.sigma**2)

    def widened(self, factor: float = math.sqrt(2.0)) -> "KernelConfig":
        """Return the kernel whose bandwidth is scaled by ``factor``.

        The scaled size is not range-checked; the estimators widen by √2 at most.
        """
        return self.model_copy(update={"sigma": self.sigma * factor})


def samples_to_array(samples: Iterable[ComplexSample]) -> ComplexArray:
    """Convert a sequence of ComplexSample models to a complex128 array."""
    return np.array([s.to_complex() for s in samples], dtype=np.complex128)


def array_to_samples(values: Sequence[complex] | ComplexArray) -> list[ComplexSample]:
    """Convert a complex array to a list of ComplexSample models."""
    return [ComplexSample.from_complex(v) for v in np.asarray(values, dtype=np.complex128)]
