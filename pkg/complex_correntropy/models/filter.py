"""Data models for adaptive filter options and recursive state."""

from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from complex_correntropy.exceptions import DomainError, ShapeError
from complex_correntropy.models.signal import ComplexArray, check_kernel_size

HERMITIAN_TOLERANCE = 1e-12


class SolverOptions(BaseModel):
    """Options shared by the batch and recursive MCCC solvers."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    sigma: float = Field(gt=0, allow_inf_nan=False, description="Kernel size")
    max_iter: int = Field(default=100, ge=1)
    tol: float = Field(default=1e-8, gt=0, allow_inf_nan=False)
    reg_delta: float = Field(default=1e-3, ge=0, allow_inf_nan=False)
    update: Literal["solve", "inverse"] = "solve"

    @field_validator("sigma")
    @classmethod
    def validate_sigma(cls, v: float) -> float:
        return check_kernel_size(v)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class FilterState:
    """Recursive filter state.

    Attributes:
        w: Current weight estimate, length M
        R: Kernel-weighted autocorrelation accumulator, M x M Hermitian
        P: Kernel-weighted cross-correlation accumulator, length M
        n: Number of samples consumed
        R_inv: Inverse of R, carried only by the rank-one inverse update path
    """

    w: ComplexArray
    R: np.ndarray
    P: ComplexArray
    n: int = 0
    R_inv: np.ndarray | None = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", _frozen(self.w))
        object.__setattr__(self, "R", _frozen(self.R))
        object.__setattr__(self, "P", _frozen(self.P))
        if self.R_inv is not None:
            object.__setattr__(self, "R_inv", _frozen(self.R_inv))

        m = self.w.shape[0] if self.w.ndim == 1 else -1
        if m < 1:
            raise ShapeError(f"weight vector must be 1-D and non-empty, got shape {self.w.shape}")
        if self.R.shape != (m, m):
            raise ShapeError(f"R has shape {self.R.shape}, expected {(m, m)}")
        if self.P.shape != (m,):
            raise ShapeError(f"P has shape {self.P.shape}, expected {(m,)}")
        if self.R_inv is not None and self.R_inv.shape != (m, m):
            raise ShapeError(f"R_inv has shape {self.R_inv.shape}, expected {(m, m)}")
        if self.n < 0:
            raise DomainError(f"iteration counter must be >= 0, got {self.n}")

        asymmetry = float(np.max(np.abs(self.R - self.R.conj().T)))
        if asymmetry > HERMITIAN_TOLERANCE * max(1.0, float(np.max(np.abs(self.R)))):
            raise DomainError(f"R is not Hermitian (max asymmetry {asymmetry:.3e})")

    @property
    def order(self) -> int:
        """Number of filter taps M."""
        return int(self.w.shape[0])
