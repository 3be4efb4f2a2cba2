import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdistinguish.errors import (
    InvalidPrior,
    InvalidRank,
    NonHermitianInput,
    NonSquare,
    NotPositive,
    ParseError,
    TraceNotOne,
)
from qdistinguish.states import (
    dumps_matrix,
    loads_matrix,
    make_weighted_pair,
    random_mixed,
    random_pure,
    read_matrix,
    validate_density,
    write_matrix,
)

from conftest import random_hermitian


def test_validate_density():
    rho = validate_density(np.diag([0.5, 0.5]))
    np.testing.assert_allclose(rho.matrix, np.diag([0.5, 0.5]))
    with pytest.raises(TraceNotOne):
        validate_density(np.diag([0.6, 0.6]))
    with pytest.raises(NotPositive):
        validate_density(np.diag([1.2, -0.2]))


def test_validate_density_clips_noise():
    rho = validate_density(np.diag([1.0 + 5e-11, -5e-11]))
    assert np.linalg.eigvalsh(rho.matrix).min() >= 0.0


def test_weighted_pair_priors():
    rho, sigma = validate_density(np.diag([1.0, 0.0])), validate_density(np.eye(2) / 2)
    pair = make_weighted_pair(rho, sigma, 0.5)
    np.testing.assert_allclose(pair.A, rho.matrix / 2)
    np.testing.assert_allclose(pair.B, sigma.matrix / 2)
    pair = make_weighted_pair(rho, sigma, 1.0)
    np.testing.assert_allclose(pair.A, rho.matrix)
    np.testing.assert_array_equal(pair.B, 0)
    pair = make_weighted_pair(rho, sigma, 0.3)
    assert np.trace(pair.A).real == pytest.approx(0.3)
    assert np.trace(pair.B).real == pytest.approx(0.7)


@pytest.mark.parametrize("p", [-0.1, 1.5])
def test_invalid_prior(p):
    rho = validate_density(np.eye(2) / 2)
    with pytest.raises(InvalidPrior):
        make_weighted_pair(rho, rho, p)


def test_random_pure_scalar():
    np.testing.assert_allclose(random_pure(1, 3).matrix, [[1.0]])


@settings(max_examples=30, deadline=None)
@given(dim=st.integers(1, 10), seed=st.integers(0, 2**63 - 1))
def test_random_pure_is_rank_one_projector(dim, seed):
    rho = random_pure(dim, seed).matrix
    lam = np.sort(np.linalg.eigvalsh(rho))[::-1]
    expected = np.zeros(dim)
    expected[0] = 1.0
    np.testing.assert_allclose(lam, expected, atol=1e-12)
    assert abs(np.trace(rho) - 1) <= 1e-12


def test_random_states_deterministic():
    np.testing.assert_array_equal(random_pure(4, 11).matrix, random_pure(4, 11).matrix)
    np.testing.assert_array_equal(random_mixed(4, 2, 11).matrix, random_mixed(4, 2, 11).matrix)
    assert not np.array_equal(random_mixed(4, 4, 11).matrix, random_mixed(4, 4, 12).matrix)


def test_random_mixed_full_support():
    for seed in range(20):
        assert np.linalg.eigvalsh(random_mixed(5, 5, seed).matrix).min() > 0


def test_random_mixed_rank_one_is_pure():
    lam = np.linalg.eigvalsh(random_mixed(4, 1, 5).matrix)
    np.testing.assert_allclose(np.sort(lam), [0, 0, 0, 1], atol=1e-12)


@pytest.mark.parametrize("rank", [0, 5])
def test_random_mixed_invalid_rank(rank):
    with pytest.raises(InvalidRank):
        random_mixed(4, rank, 0)


@settings(max_examples=40, deadline=None)
@given(dim=st.integers(1, 8), data=st.data())
def test_random_mixed_is_valid_density(dim, data):
    rank = data.draw(st.integers(1, dim))
    seed = data.draw(st.integers(0, 2**63 - 1))
    rho = random_mixed(dim, rank, seed)
    validate_density(rho.matrix)
    assert np.linalg.matrix_rank(rho.matrix, tol=1e-10) == rank


def test_file_round_trip(tmp_path, rng):
    H = random_hermitian(4, rng)
    path = tmp_path / "m.json"
    write_matrix(path, H)
    np.testing.assert_array_equal(read_matrix(path), H)
    obj = json.loads(path.read_text())
    assert obj["dim"] == 4 and len(obj["rows"]) == 4


def test_file_uses_17_significant_digits():
    text = dumps_matrix(np.array([[1 / 3]]))
    assert "0.33333333333333331" in text


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=4, max_size=4))
def test_round_trip_property(vals):
    a, b, c, d = vals
    H = np.array([[a, c + 1j * d], [c - 1j * d, b]])
    np.testing.assert_array_equal(loads_matrix(dumps_matrix(H)), H)


def test_non_square_file():
    text = json.dumps({"dim": 2, "rows": [[[1, 0], [0, 0], [0, 0]], [[0, 0], [1, 0], [0, 0]]]})
    with pytest.raises(NonSquare):
        loads_matrix(text)
    with pytest.raises(NonSquare):
        loads_matrix(json.dumps({"dim": 3, "rows": [[[1, 0]]]}))


def test_missing_imaginary_part():
    text = json.dumps({"dim": 2, "rows": [[[1, 0], [0]], [[0, 0], [1, 0]]]})
    with pytest.raises(ParseError, match=r"rows\[0\]\[1\]"):
        loads_matrix(text)


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as info:
        loads_matrix('{\n  "dim": 1,\n  "rows": [[[1, 0]]\n}')
    assert info.value.line == 4


def test_non_hermitian_file():
    text = json.dumps({"dim": 2, "rows": [[[1, 0], [1, 0]], [[0, 0], [1, 0]]]})
    with pytest.raises(NonHermitianInput):
        loads_matrix(text)
