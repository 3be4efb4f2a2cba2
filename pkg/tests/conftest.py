import numpy as np
import pytest

from qdistinguish.states import make_weighted_pair, random_mixed, random_pure


def random_hermitian(dim, rng):
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (G + G.conj().T) / 2


def random_complex(dim, rng):
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_pair(dim, seed, p=0.5, full_rank=True):
    """Pair of Ginibre states; ``full_rank=False`` draws random ranks."""
    rng = np.random.default_rng(seed)
    states = []
    for _ in range(2):
        rank = dim if full_rank else int(rng.integers(1, dim + 1))
        child = int(rng.integers(2**63))
        states.append(random_pure(dim, child) if rank == 1 else random_mixed(dim, rank, child))
    return make_weighted_pair(states[0], states[1], p)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
