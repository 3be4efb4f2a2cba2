"""Density operators, prior-weighted pairs, random states and matrix files."""

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    InvalidPrior,
    InvalidRank,
    NonSquare,
    NotPositive,
    ParseError,
    TraceNotOne,
)
from .spectral import TOL_PSD, as_hermitian, spectral_decompose

TOL_TRACE = 1e-10


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A validated quantum state: Hermitian, PSD and of unit trace."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class WeightedStatePair:
    """The pair ``(A, B) = (p rho, (1 - p) sigma)`` with ``tr A + tr B = 1``."""

    A: np.ndarray
    B: np.ndarray
    p: float
    rho: DensityOperator
    sigma: DensityOperator

    @property
    def dim(self) -> int:
        return self.A.shape[0]

    def swapped(self) -> "WeightedStatePair":
        return make_weighted_pair(self.sigma, self.rho, 1.0 - self.p)

    def normalized(self) -> "WeightedStatePair":
        """The same states under a uniform prior."""
        if self.p == 0.5:
            return self
        return make_weighted_pair(self.rho, self.sigma, 0.5)


def _readonly(M: np.ndarray) -> np.ndarray:
    M.setflags(write=False)
    return M


def _as_matrix(state) -> np.ndarray:
    if isinstance(state, DensityOperator):
        return state.matrix
    return np.asarray(state, dtype=complex)


def validate_density(M) -> DensityOperator:
    """Check positivity and unit trace; clip eigenvalue noise in ``[-TOL_PSD, 0)``."""
    H = as_hermitian(M)
    lam, V = spectral_decompose(H)
    if lam[-1] < -TOL_PSD:
        raise NotPositive(f"state has a negative eigenvalue {lam[-1]:.3e}")
    tr = float(np.trace(H).real)
    if abs(tr - 1.0) > TOL_TRACE:
        raise TraceNotOne(f"state has trace {tr!r}")
    if lam[-1] < 0:
        H = (V * np.clip(lam, 0.0, None)) @ V.conj().T
        H = (H + H.conj().T) / 2
    return DensityOperator(_readonly(H))


def make_weighted_pair(rho, sigma, p: float) -> WeightedStatePair:
    if not isinstance(rho, DensityOperator):
        rho = validate_density(rho)
    if not isinstance(sigma, DensityOperator):
        sigma = validate_density(sigma)
    if not 0.0 <= p <= 1.0:
        raise InvalidPrior(f"prior must lie in [0, 1], got {p}")
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    A = _readonly(p * rho.matrix)
    B = _readonly((1.0 - p) * sigma.matrix)
    return WeightedStatePair(A, B, float(p), rho, sigma)


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_pure(dim: int, seed: int) -> DensityOperator:
    """Projector onto a normalized complex Gaussian vector."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    rng = np.random.default_rng(seed)
    v = _complex_gaussian(rng, dim)
    v /= np.linalg.norm(v)
    rho = np.outer(v, v.conj())
    return DensityOperator(_readonly((rho + rho.conj().T) / 2))


def random_mixed(dim: int, rank: int, seed: int) -> DensityOperator:
    """Ginibre state ``G G* / tr(G G*)`` with ``G`` of shape ``(dim, rank)``."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    if not 1 <= rank <= dim:
        raise InvalidRank(f"rank must lie in [1, {dim}], got {rank}")
    rng = np.random.default_rng(seed)
    G = _complex_gaussian(rng, (dim, rank))
    rho = G @ G.conj().T
    rho /= np.trace(rho).real
    return DensityOperator(_readonly((rho + rho.conj().T) / 2))


def _format_float(x: float) -> str:
    if not np.isfinite(x):
        raise ValueError(f"cannot serialize non-finite entry {x!r}")
    return format(float(x), ".17g")


def dumps_matrix(M) -> str:
    M = _as_matrix(M)
    rows = []
    for row in M:
        cells = ", ".join(f"[{_format_float(z.real)}, {_format_float(z.imag)}]" for z in row)
        rows.append(f"    [{cells}]")
    body = ",\n".join(rows)
    return f'{{\n  "dim": {M.shape[0]},\n  "rows": [\n{body}\n  ]\n}}\n'


def write_matrix(path, M) -> None:
    Path(path).write_text(dumps_matrix(M), encoding="utf-8")


def _number(value, position):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected a number, got {value!r}", position=position)
    if not np.isfinite(value):
        raise ParseError(f"non-finite entry {value!r}", position=position)
    return float(value)


def loads_matrix(text: str) -> np.ndarray:
    """Parse matrix-file text into a Hermitian ``complex`` array."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(obj, dict) or "dim" not in obj or "rows" not in obj:
        raise ParseError("expected an object with fields 'dim' and 'rows'")
    dim, rows = obj["dim"], obj["rows"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"'dim' must be a positive integer, got {dim!r}")
    if not isinstance(rows, list):
        raise ParseError("'rows' must be an array")
    if len(rows) != dim:
        raise NonSquare(f"'dim' is {dim} but there are {len(rows)} rows")
    M = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError("row must be an array", position=f"rows[{i}]")
        if len(row) != dim:
            raise NonSquare(f"row {i} has {len(row)} entries, expected {dim}")
        for j, entry in enumerate(row):
            where = f"rows[{i}][{j}]"
            if not isinstance(entry, list) or len(entry) != 2:
                raise ParseError("entry must be a two-element [re, im] array", position=where)
            M[i, j] = complex(_number(entry[0], where), _number(entry[1], where))
    as_hermitian(M)
    return M


def read_matrix(path) -> np.ndarray:
    return loads_matrix(Path(path).read_text(encoding="utf-8"))
