import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdistinguish.errors import DomainError
from qdistinguish.hot import (
    binary_relative_entropy,
    hot_s,
    hot_s_inverse,
    hot_s_minimizer,
    hot_series,
    hot_upper,
    pinsker_lower,
)
from qdistinguish.measures import relative_entropy_S

# 40-digit mpmath minimization of the binary relative entropy
MPMATH_VALUES = {
    0.1: 0.020044683157952950097,
    0.3: 0.1837845652683163461,
    0.5: 0.53229790889199995063,
    0.7: 1.1308920012583668621,
    0.9: 2.3021828844129876454,
}


def test_zero():
    assert hot_s(0.0) == 0.0


@pytest.mark.parametrize("x, expected", sorted(MPMATH_VALUES.items()))
def test_against_high_precision_oracle(x, expected):
    assert hot_s(x) == pytest.approx(expected, abs=1e-12)


def test_series_agreement_at_small_x():
    x = 0.1
    assert abs(hot_s(x) - (2 * x**2 + 4 / 9 * x**4 + 32 / 135 * x**6)) <= 5e-8


def test_envelope_at_0_9():
    assert 1.62 <= hot_s(0.9) <= 2.302585093


def test_near_one_is_saturated_by_upper_bound():
    for x in (0.99, 0.999):
        assert hot_s(x) == pytest.approx(hot_upper(x), rel=1e-12)


@pytest.mark.parametrize("x", [-0.01, 1.0, 1.5])
def test_domain(x):
    with pytest.raises(DomainError):
        hot_s(x)
    with pytest.raises(DomainError):
        hot_series(x)


def test_closed_form_helpers():
    assert hot_series(0.5) == pytest.approx(0.5 + 1 / 36 + 1 / 270, abs=1e-15)
    assert hot_series(0.5) == pytest.approx(0.531481, abs=1e-6)
    assert pinsker_lower(0.5) == 0.5
    assert hot_upper(0.5) == pytest.approx(math.log(2), abs=1e-15)


def test_minimizer_is_a_grid_minimum():
    for x in (0.05, 0.4, 0.8):
        value, r = hot_s_minimizer(x)
        grid = np.linspace(x + 1e-9, 1 - 1e-9, 20001)
        brute = min(binary_relative_entropy(x, g) for g in grid)
        assert value <= brute + 1e-12
        assert value == pytest.approx(binary_relative_entropy(x, r), abs=1e-15)


def test_binary_relative_entropy_matches_matrix_entropy():
    x, r = 0.2, 0.55
    rho, sigma = np.diag([r - x, 1 - r + x]), np.diag([r, 1 - r])
    assert binary_relative_entropy(x, r) == pytest.approx(relative_entropy_S(rho, sigma), abs=1e-14)


def test_inverse_examples():
    assert hot_s_inverse(0.0) == 0.0
    assert hot_s_inverse(hot_s(0.3)) == pytest.approx(0.3, abs=1e-8)
    # Pinsker: s(x) >= 2x^2, so s^-1(y) <= sqrt(y / 2)
    assert hot_s_inverse(2 * 0.01**2) <= 0.01
    assert hot_s_inverse(math.inf) == 1 - 1e-12


def test_inverse_domain():
    with pytest.raises(DomainError):
        hot_s_inverse(-1.0)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.0, 0.99))
def test_inverse_round_trip(x):
    assert hot_s_inverse(hot_s(x)) == pytest.approx(x, abs=1e-8)


def test_monotone_and_enveloped():
    xs = np.linspace(0, 0.999, 1000)
    values = np.array([hot_s(x) for x in xs])
    assert np.all(np.diff(values) > 0)
    for x, v in zip(xs, values):
        assert pinsker_lower(x) <= v <= hot_upper(x)
