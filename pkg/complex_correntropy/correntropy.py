"""Gaussian kernels, Parzen density estimation and correntropy estimators.

The estimators take the base kernel size σ from a :class:`KernelConfig` and
apply the σ√2 bandwidth that results from integrating the product of two
Parzen kernels along the bisector of the joint space. Callers never pass the
widened bandwidth themselves.

All functions accept numpy arrays and scalars; scalar inputs return Python
floats.
"""

import math
from collections.abc import Iterable
from typing import Any

import numpy as np

from complex_correntropy.exceptions import DomainError, ShapeError
from complex_correntropy.models.signal import ComplexArray, ComplexSample, KernelConfig, RealArray


SQRT2 = math.sqrt(2.0)


def as_complex_array(values: Any, name: str = "values") -> ComplexArray:
    """Convert scalars, ComplexSample models or sequences of either to a finite complex array.

    Raises:
        DomainError: If any component is NaN or infinite
    """
    if isinstance(values, ComplexSample):
        array = np.asarray(values.to_complex(), dtype=np.complex128)
    elif isinstance(values, Iterable) and not isinstance(values, np.ndarray | str):
        items = list(values)
        array = np.array(
            [v.to_complex() if isinstance(v, ComplexSample) else v for v in items],
            dtype=np.complex128,
        )
    else:
        array = np.asarray(values, dtype=np.complex128)

    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} contains non-finite values")
    return array


def as_real_array(values: Any, name: str = "values") -> RealArray:
    """Convert to a finite float64 array.

    Raises:
        DomainError: If any value is NaN or infinite
    """
    array = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} contains non-finite values")
    return array


def _paired(a: np.ndarray, b: np.ndarray) -> None:
    if a.ndim != 1 or b.ndim != 1:
        raise ShapeError(f"sequences must be 1-D, got shapes {a.shape} and {b.shape}")
    if a.shape != b.shape:
        raise ShapeError(f"paired sequences differ in length: {a.shape[0]} != {b.shape[0]}")
    if a.shape[0] == 0:
        raise DomainError("paired sequences must contain at least one sample")


def _scalar_or_array(result: np.ndarray) -> float | np.ndarray:
    return float(result) if result.ndim == 0 else result


def gaussian_kernel(x: Any, cfg: KernelConfig) -> float | np.ndarray:
    """Real Gaussian kernel G_σ(x) = exp(−x²/(2σ²)) / (√(2π)·σ).

    Args:
        x: Real scalar or array of arguments
        cfg: Kernel bandwidth

    Returns:
        Kernel value(s), strictly positive for moderate arguments

    Raises:
        DomainError: If x is not finite
    """
    x = as_real_array(x, "x")
    return _scalar_or_array(cfg.real_normalizer * np.exp(-(x * x) / (2.0 * cfg.sigma**2)))


def complex_gaussian_kernel(c: Any, cfg: KernelConfig) -> float | np.ndarray:
    """Complex Gaussian kernel G^C_σ(c) = exp(−c·c*/(2σ²)) / (2πσ²).

    The result is real-valued and factorizes as G_σ(Re c)·G_σ(Im c).
    """
    c = as_complex_array(c, "c")
    modulus_sq = c.real * c.real + c.imag * c.imag
    return _scalar_or_array(cfg.complex_normalizer * np.exp(-modulus_sq / (2.0 * cfg.sigma**2)))


def kernel_weight(e: Any, sigma: float) -> float | np.ndarray:
    """Scale-free kernel weight exp(−|e|²/(4σ²)) in (0, 1].

    Equals G^C_{σ√2}(e) / G^C_{σ√2}(0). The fixed-point solvers weight samples
    with this value so that the diagonal regularizer keeps the same meaning
    at every kernel size.
    """
    e = np.asarray(e, dtype=np.complex128)
    modulus_sq = e.real * e.real + e.imag * e.imag
    return _scalar_or_array(np.exp(-modulus_sq / (4.0 * sigma * sigma)))


def parzen_density(samples: Any, query: Any, cfg: KernelConfig) -> float:
    """L-dimensional Parzen estimate with a shared Gaussian bandwidth.

    Args:
        samples: N points of dimension L, shape (N, L); a 1-D array is read as N points with L=1
        query: Point of dimension L at which to evaluate the density
        cfg: Kernel bandwidth shared by every dimension

    Returns:
        (1/N)·Σₙ Πₗ G_σ(queryₗ − sampleₙ,ₗ)

    Raises:
        ShapeError: If sample and query dimensions disagree
        DomainError: If the sample set is empty or contains non-finite values
    """
    points = as_real_array(samples, "samples")
    if points.ndim == 1:
        points = points[:, np.newaxis]
    if points.ndim != 2:
        raise ShapeError(f"samples must have shape (N, L), got {points.shape}")
    if points.shape[0] == 0:
        raise DomainError("Parzen estimation requires at least one sample")

    q = np.atleast_1d(as_real_array(query, "query"))
    if q.ndim != 1 or q.shape[0] != points.shape[1]:
        raise ShapeError(
            f"query has dimension {q.shape}, samples have dimension {points.shape[1]}"
        )

    per_dimension = gaussian_kernel(q[np.newaxis, :] - points, cfg)
    return float(np.mean(np.prod(per_dimension, axis=1)))


def correntropy_real(x: Any, y: Any, cfg: KernelConfig) -> float:
    """Correntropy of two real sequences, (1/N)·Σₙ G_{σ√2}(xₙ − yₙ).

    The same value is the Parzen estimate of the density of the event X = Y.
    """
    x = as_real_array(x, "x")
    y = as_real_array(y, "y")
    _paired(x, y)
    return float(np.mean(gaussian_kernel(x - y, cfg.widened(SQRT2))))


def complex_correntropy(c1: Any, c2: Any, cfg: KernelConfig) -> float:
    """Complex correntropy estimate (1/N)·Σₙ G^C_{σ√2}(c1ₙ − c2ₙ).

    Lies in (0, 1/(4πσ²)], reaching the upper bound only when every pair coincides.
    """
    c1 = as_complex_array(c1, "c1")
    c2 = as_complex_array(c2, "c2")
    _paired(c1, c2)
    return float(np.mean(complex_gaussian_kernel(c1 - c2, cfg.widened(SQRT2))))


def correntropy_series(c1: Any, c2: Any, cfg: KernelConfig, n_terms: int) -> float:
    """Truncated exponential series of the complex correntropy estimator.

    With u = |c1ₙ − c2ₙ|²/(4σ²), returns (1/(4πσ²))·meanₙ Σ_{m<n_terms} (−u)ᵐ/m!.
    The m-th term carries the 2m-th moment of the difference; large σ suppresses
    the higher terms and leaves the covariance term.
    """
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    c1 = as_complex_array(c1, "c1")
    c2 = as_complex_array(c2, "c2")
    _paired(c1, c2)

    diff = c1 - c2
    u = (diff.real**2 + diff.imag**2) / (4.0 * cfg.sigma**2)
    term = np.ones_like(u)
    total = np.ones_like(u)
    for m in range(1, n_terms):
        term = term * (-u) / m
        total = total + term
    return float(np.mean(total) / (4.0 * math.pi * cfg.sigma**2))


def taylor_second_order_approx(c1: Any, c2: Any, cfg: KernelConfig) -> float:
    """Constant plus covariance term of the estimator's expansion.

    1/(4πσ²) − (1/(16πσ⁴))·meanₙ |c1ₙ − c2ₙ|²
    """
    return correntropy_series(c1, c2, cfg, n_terms=2)
