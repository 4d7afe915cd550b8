"""Maximum complex correntropy criterion (MCCC) solvers and the complex RLS baseline.

All filters share the linear predictor y = wᴴx and the cross-term convention
d*·x. Kernel weights use the scale-free form exp(−|e|²/(4σ²)), i.e. the complex
Gaussian kernel of bandwidth σ√2 divided by its peak value; the common factor
cancels between R and P, so only its size relative to the regularizer δ
changes.
"""

from typing import Any, NamedTuple

import numpy as np
import scipy.linalg

from complex_correntropy.correntropy import (
    SQRT2,
    as_complex_array,
    complex_gaussian_kernel,
    kernel_weight,
)
from complex_correntropy.exceptions import (
    ConfigurationError,
    NumericError,
    ShapeError,
    SingularMatrixError,
)
from complex_correntropy.logging_config import get_logger
from complex_correntropy.models.filter import FilterState, SolverOptions
from complex_correntropy.models.signal import ComplexArray, KernelConfig

logger = get_logger(__name__)

# Cholesky pivots below this fraction of the largest diagonal entry are treated as singular
_PIVOT_RATIO = 100 * np.finfo(np.float64).eps


class BatchSolution(NamedTuple):
    """Result of the batch fixed-point solver."""

    weights: ComplexArray
    iterations: int
    converged: bool
    cost: float


def _hermitian(matrix: np.ndarray) -> np.ndarray:
    return 0.5 * (matrix + matrix.conj().T)


def _input_vector(x: Any, m: int) -> ComplexArray:
    x = as_complex_array(x, "x")
    if x.shape != (m,):
        raise ShapeError(f"input vector has shape {x.shape}, expected ({m},)")
    return x


def _desired_sample(d: Any) -> complex:
    d = as_complex_array(d, "d")
    if d.ndim != 0:
        raise ShapeError(f"desired sample must be a scalar, got shape {d.shape}")
    return complex(d)


def predict(w: Any, x: Any) -> complex:
    """Hermitian inner product wᴴx.

    Raises:
        ShapeError: If w and x differ in length
    """
    w = as_complex_array(w, "w")
    x = as_complex_array(x, "x")
    if w.ndim != 1 or w.shape != x.shape:
        raise ShapeError(f"weights {w.shape} and input {x.shape} do not agree")
    return complex(np.vdot(w, x))


def _smallest_pivot(matrix: np.ndarray) -> float:
    _, d, _ = scipy.linalg.ldl(matrix, hermitian=True)
    return float(np.min(np.diag(d).real))


def solve_weights(R: Any, P: Any, reg_delta: float = 0.0) -> ComplexArray:
    """Solve (R + δI)w = P through a Hermitian positive-definite factorization.

    Args:
        R: Hermitian M x M matrix
        P: Right-hand side of length M
        reg_delta: Diagonal regularizer δ >= 0

    Returns:
        Weight vector w

    Raises:
        ShapeError: If R is not square or P does not match it
        SingularMatrixError: If R + δI is not numerically positive definite
    """
    R = as_complex_array(R, "R")
    P = as_complex_array(P, "P")
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise ShapeError(f"R must be square, got shape {R.shape}")
    m = R.shape[0]
    if P.shape != (m,):
        raise ShapeError(f"P has shape {P.shape}, expected ({m},)")
    if reg_delta < 0:
        raise ConfigurationError(f"reg_delta must be >= 0, got {reg_delta}")

    A = _hermitian(R) + reg_delta * np.eye(m)
    try:
        factor, lower = scipy.linalg.cho_factor(A, lower=True, check_finite=False)
    except np.linalg.LinAlgError as e:
        pivot = _smallest_pivot(A)
        raise SingularMatrixError(
            f"Weighted autocorrelation matrix is singular (smallest pivot {pivot:.3e})",
            smallest_pivot=pivot,
            details=f"{e}. Increase reg_delta or supply more linearly independent samples.",
        ) from e

    pivots = np.abs(np.diag(factor)) ** 2
    if pivots.min() <= _PIVOT_RATIO * m * float(np.max(A.diagonal().real)):
        pivot = float(pivots.min())
        raise SingularMatrixError(
            f"Weighted autocorrelation matrix is singular (smallest pivot {pivot:.3e})",
            smallest_pivot=pivot,
            details="Increase reg_delta or supply more linearly independent samples.",
        )
    return scipy.linalg.cho_solve((factor, lower), P, check_finite=False)


def _regression_data(X: Any, d: Any) -> tuple[np.ndarray, ComplexArray]:
    X = as_complex_array(X, "X")
    d = as_complex_array(d, "d")
    if X.ndim != 2:
        raise ShapeError(f"X must be an N x M matrix, got shape {X.shape}")
    if d.shape != (X.shape[0],):
        raise ShapeError(f"d has shape {d.shape}, expected ({X.shape[0]},)")
    return X, d


def mccc_cost(X: Any, d: Any, w: Any, sigma: float) -> float:
    """Sample MCCC objective (1/N)·Σₙ G^C_{σ√2}(dₙ − wᴴxₙ)."""
    X, d = _regression_data(X, d)
    w = as_complex_array(w, "w")
    if w.shape != (X.shape[1],):
        raise ShapeError(f"w has shape {w.shape}, expected ({X.shape[1]},)")
    errors = d - X @ w.conj()
    cfg = KernelConfig(sigma=sigma).widened(SQRT2)
    return float(np.mean(complex_gaussian_kernel(errors, cfg)))


def _fixed_point_sweep(
    X: np.ndarray, d: ComplexArray, w: ComplexArray, sigma: float, reg_delta: float
) -> ComplexArray:
    errors = d - X @ w.conj()
    weights = kernel_weight(errors, sigma)
    R = (X.T * weights) @ X.conj()
    P = X.T @ (weights * d.conj())
    return solve_weights(R, P, reg_delta)


def mccc_batch_fixed_point(
    X: Any, d: Any, opts: SolverOptions, w0: Any | None = None
) -> BatchSolution:
    """Iterate the MCCC fixed-point equation over a whole data block.

    Each sweep recomputes the errors eₙ = dₙ − wᴴxₙ from the current weights and
    solves [Σ κ(eₙ)xₙxₙᴴ + δI] w = Σ κ(eₙ)dₙ*xₙ. Iteration stops when
    ‖w_new − w_old‖ <= tol·(1 + ‖w_old‖) or after max_iter sweeps.

    Raises:
        ShapeError: If N < M or dimensions disagree
        SingularMatrixError: If the weighted autocorrelation is singular
        NumericError: If a sweep produces non-finite weights
    """
    X, d = _regression_data(X, d)
    n, m = X.shape
    if n < m:
        raise ShapeError(
            f"Batch MCCC needs at least as many samples as taps (N={n}, M={m})",
            "The problem is underdetermined; supply more rows.",
        )
    w = np.zeros(m, dtype=np.complex128) if w0 is None else _input_vector(w0, m)

    converged = False
    sweep = 0
    for sweep in range(1, opts.max_iter + 1):
        try:
            w_new = _fixed_point_sweep(X, d, w, opts.sigma, opts.reg_delta)
        except SingularMatrixError as e:
            raise SingularMatrixError(
                e.message, smallest_pivot=e.smallest_pivot, details=f"{e.details} (sweep {sweep})"
            ) from e
        if not np.all(np.isfinite(w_new)):
            raise NumericError(f"Non-finite weights at sweep {sweep}", sweep=sweep)

        change = float(np.linalg.norm(w_new - w))
        threshold = opts.tol * (1.0 + float(np.linalg.norm(w)))
        logger.debug(f"sweep {sweep}: weight change {change:.3e} (threshold {threshold:.3e})")
        w = w_new
        if change <= threshold:
            converged = True
            break

    if not converged:
        logger.warning(f"MCCC batch solver did not converge in {opts.max_iter} sweeps")
    return BatchSolution(
        weights=w, iterations=sweep, converged=converged, cost=mccc_cost(X, d, w, opts.sigma)
    )


def rank_one_inverse_update(R_inv: Any, x: Any, weight: float) -> np.ndarray:
    """Sherman-Morrison update: (R + weight·xxᴴ)⁻¹ from R⁻¹."""
    R_inv = as_complex_array(R_inv, "R_inv")
    x = _input_vector(x, R_inv.shape[0])
    u = R_inv @ x
    denominator = 1.0 + weight * np.real(np.vdot(x, u))
    return _hermitian(R_inv - (weight / denominator) * np.outer(u, u.conj()))


def mccc_recursive_init(m: int, opts: SolverOptions) -> FilterState:
    """Initial recursive state: w = 0, R = δI, P = 0, n = 0.

    Raises:
        ConfigurationError: If m < 1 or the inverse-update path has δ = 0
    """
    if m < 1:
        raise ConfigurationError(f"filter order must be >= 1, got {m}")
    R_inv = None
    if opts.update == "inverse":
        if opts.reg_delta <= 0:
            raise ConfigurationError(
                "The inverse update needs an invertible starting matrix",
                "Set reg_delta > 0 or use update='solve'.",
            )
        R_inv = np.eye(m) / opts.reg_delta
    return FilterState(
        w=np.zeros(m),
        R=opts.reg_delta * np.eye(m),
        P=np.zeros(m),
        n=0,
        R_inv=R_inv,
    )


def mccc_recursive_step(state: FilterState, x: Any, d: Any, opts: SolverOptions) -> FilterState:
    """Consume one sample (x, d) and return the next MCCC state.

    The kernel weight uses the a-priori error e = d − wᴴx computed with the
    incoming state's weights.

    Raises:
        ShapeError: If x does not match the state order
        SingularMatrixError: If the accumulated R cannot be solved
    """
    x = _input_vector(x, state.order)
    d = _desired_sample(d)

    e = d - complex(np.vdot(state.w, x))
    g = kernel_weight(e, opts.sigma)

    R = _hermitian(state.R + g * np.outer(x, x.conj()))
    P = state.P + g * np.conj(d) * x

    if opts.update == "inverse" and state.R_inv is not None:
        R_inv = rank_one_inverse_update(state.R_inv, x, g)
        w = R_inv @ P
    else:
        R_inv = None
        w = solve_weights(R, P, 0.0)

    return FilterState(w=w, R=R, P=P, n=state.n + 1, R_inv=R_inv)


def crls_init(m: int, reg_delta: float) -> FilterState:
    """Initial complex RLS state: w = 0, R = δI, P = 0."""
    if m < 1:
        raise ConfigurationError(f"filter order must be >= 1, got {m}")
    if reg_delta < 0:
        raise ConfigurationError(f"reg_delta must be >= 0, got {reg_delta}")
    return FilterState(w=np.zeros(m), R=reg_delta * np.eye(m), P=np.zeros(m), n=0)


def crls_step(state: FilterState, x: Any, d: Any, forgetting_lambda: float) -> FilterState:
    """Exponentially weighted complex RLS step.

    R ← λR + xxᴴ, P ← λP + d*·x, w ← R⁻¹P.
    """
    if not 0.0 < forgetting_lambda <= 1.0:
        raise ConfigurationError(f"forgetting factor must lie in (0, 1], got {forgetting_lambda}")
    x = _input_vector(x, state.order)
    d = _desired_sample(d)

    R = _hermitian(forgetting_lambda * state.R + np.outer(x, x.conj()))
    P = forgetting_lambda * state.P + np.conj(d) * x
    w = solve_weights(R, P, 0.0)
    return FilterState(w=w, R=R, P=P, n=state.n + 1)


class RecursiveMCCC:
    """Streaming MCCC filter holding its own FilterState."""

    name = "mccc"

    def __init__(self, order: int, opts: SolverOptions):
        self.opts = opts
        self.state = mccc_recursive_init(order, opts)

    @property
    def sigma(self) -> float | None:
        return self.opts.sigma

    @property
    def weights(self) -> ComplexArray:
        return self.state.w

    def step(self, x: Any, d: Any) -> ComplexArray:
        self.state = mccc_recursive_step(self.state, x, d, self.opts)
        return self.state.w


class ComplexRLS:
    """Streaming complex RLS filter holding its own FilterState."""

    name = "rls"
    sigma = None

    def __init__(self, order: int, forgetting_lambda: float = 1.0, reg_delta: float = 1e-3):
        self.forgetting_lambda = forgetting_lambda
        self.state = crls_init(order, reg_delta)

    @property
    def weights(self) -> ComplexArray:
        return self.state.w

    def step(self, x: Any, d: Any) -> ComplexArray:
        self.state = crls_step(self.state, x, d, self.forgetting_lambda)
        return self.state.w
