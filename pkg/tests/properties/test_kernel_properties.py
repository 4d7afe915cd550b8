"""Property-based tests for kernels and correntropy estimators.

Feature: complex-correntropy, Properties 1-6: kernel identities and estimator bounds
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from complex_correntropy.correntropy import (
    complex_correntropy,
    complex_gaussian_kernel,
    correntropy_real,
    gaussian_kernel,
    parzen_density,
)
from complex_correntropy.models import KernelConfig

bounded = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
sigmas = st.floats(min_value=0.5, max_value=5.0)
complex_values = st.builds(complex, bounded, bounded)


@st.composite
def paired_complex(draw, min_size=1, max_size=20):
    """Two complex sequences of equal length."""
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    c1 = draw(st.lists(complex_values, min_size=n, max_size=n))
    c2 = draw(st.lists(complex_values, min_size=n, max_size=n))
    return c1, c2


@given(a=st.floats(-3.0, 3.0), b=st.floats(-3.0, 3.0), sigma=st.floats(0.5, 3.0))
def test_property_1_complex_kernel_factorization(a, b, sigma):
    """
    Feature: complex-correntropy, Property 1: Complex kernel factorization

    For any real a, b and kernel size σ, G^C_σ(a + jb) equals G_σ(a)·G_σ(b) to
    floating-point roundoff.
    """
    cfg = KernelConfig(sigma=sigma)
    product = gaussian_kernel(a, cfg) * gaussian_kernel(b, cfg)
    assert complex_gaussian_kernel(complex(a, b), cfg) == pytest.approx(product, rel=1e-13)


@given(x=bounded, c=complex_values, sigma=sigmas)
def test_property_2_kernel_positivity_and_symmetry(x, c, sigma):
    """
    Feature: complex-correntropy, Property 2: Kernel positivity and symmetry

    Both kernels are strictly positive, even, and the complex kernel is
    invariant under conjugation.
    """
    cfg = KernelConfig(sigma=sigma)
    assert gaussian_kernel(x, cfg) > 0
    assert gaussian_kernel(x, cfg) == gaussian_kernel(-x, cfg)

    value = complex_gaussian_kernel(c, cfg)
    assert value > 0
    assert complex_gaussian_kernel(c.conjugate(), cfg) == value
    assert complex_gaussian_kernel(-c, cfg) == value


@given(pairs=paired_complex(), sigma=sigmas)
def test_property_3_correntropy_bounds(pairs, sigma):
    """
    Feature: complex-correntropy, Property 3: Estimator bounds

    0 < V ≤ 1/(4πσ²), with equality when every pair coincides.
    """
    c1, c2 = pairs
    cfg = KernelConfig(sigma=sigma)
    peak = 1.0 / (4.0 * math.pi * sigma**2)

    value = complex_correntropy(c1, c2, cfg)
    assert 0 < value <= peak * (1 + 1e-15)
    assert complex_correntropy(c1, c1, cfg) == pytest.approx(peak, rel=1e-14)
    if max(abs(a - b) for a, b in zip(c1, c2, strict=True)) > 1e-6:
        assert value < peak


@given(pairs=paired_complex(), sigma=sigmas, factor=st.floats(1.0, 10.0))
def test_property_4_scale_monotonicity(pairs, sigma, factor):
    """
    Feature: complex-correntropy, Property 4: Scale monotonicity

    4πσ²·V is non-decreasing in σ for fixed sequences.
    """
    c1, c2 = pairs
    narrow = complex_correntropy(c1, c2, KernelConfig(sigma=sigma)) * 4 * math.pi * sigma**2
    wide_sigma = sigma * factor
    wide = complex_correntropy(c1, c2, KernelConfig(sigma=wide_sigma)) * 4 * math.pi * wide_sigma**2
    assert wide >= narrow - 1e-12


@given(
    data=st.lists(st.tuples(bounded, bounded), min_size=1, max_size=15),
    sigma=sigmas,
    seed=st.integers(0, 2**32 - 1),
)
def test_property_5_permutation_invariance(data, sigma, seed):
    """
    Feature: complex-correntropy, Property 5: Permutation invariance

    Reordering the sample pairs changes neither the real correntropy nor the
    Parzen density.
    """
    cfg = KernelConfig(sigma=sigma)
    x = np.array([p[0] for p in data])
    y = np.array([p[1] for p in data])
    order = np.random.default_rng(seed).permutation(len(data))

    assert correntropy_real(x[order], y[order], cfg) == pytest.approx(
        correntropy_real(x, y, cfg), rel=1e-12
    )
    points = np.column_stack([x, y])
    assert parzen_density(points[order], [0.5, -0.5], cfg) == pytest.approx(
        parzen_density(points, [0.5, -0.5], cfg), rel=1e-12, abs=1e-300
    )


@given(pairs=paired_complex(), sigma=sigmas)
def test_property_6_real_parts_reduce_to_real_correntropy(pairs, sigma):
    """
    Feature: complex-correntropy, Property 6: Real-line reduction

    For purely real sequences the complex estimator equals the real estimator
    times G_{σ√2}(0).
    """
    c1, c2 = pairs
    x = np.array([c.real for c in c1])
    y = np.array([c.real for c in c2])
    cfg = KernelConfig(sigma=sigma)

    expected = correntropy_real(x, y, cfg) * gaussian_kernel(0.0, cfg.widened())
    assert complex_correntropy(x + 0j, y + 0j, cfg) == pytest.approx(expected, rel=1e-12)
