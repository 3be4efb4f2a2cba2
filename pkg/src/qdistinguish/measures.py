"""Distinguishability measures for prior-weighted pairs of states.

Weighted measures take a :class:`WeightedStatePair` ``(A, B)``; at ``p = 1/2``
they reduce to the usual quantities for normalized states. The Chernoff
distance and the relative entropy are defined on the normalized states only.
Infinite values are represented by ``math.inf``.
"""

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .optimize import golden_section_min
from .spectral import fractional_power, psd_spectrum, schatten_norm, singular_values
from .states import WeightedStatePair, _as_matrix, make_weighted_pair

S_TOL = 1e-8


@dataclass(frozen=True)
class MeasureReport:
    L: float
    T: float
    F: float
    Q: float
    Q_min: float
    s_star: Optional[float]
    C: float
    S: float

    def as_dict(self) -> dict:
        return asdict(self)


class PairSpectra:
    """Joint eigendata of ``(A, B)`` for fast evaluation of ``tr A^s B^(1-s)``.

    With ``A = sum a_i |u_i><u_i|`` and ``B = sum b_j |v_j><v_j|`` restricted to
    their supports, ``tr A^s B^(1-s) = sum_ij a_i^s b_j^(1-s) |<u_i|v_j>|^2``.
    """

    def __init__(self, A, B):
        a, U, amask = psd_spectrum(A)
        b, V, bmask = psd_spectrum(B)
        self.a = a[amask]
        self.b = b[bmask]
        self.overlap = np.abs(U[:, amask].conj().T @ V[:, bmask]) ** 2

    def trace_power(self, s: float) -> float:
        if self.a.size == 0 or self.b.size == 0:
            return 0.0
        return float(self.a**s @ self.overlap @ self.b ** (1.0 - s))

    def minimize(self):
        """Minimize ``s -> tr A^s B^(1-s)`` over ``[0, 1]``; return ``(value, argmin)``.

        The log of this function is convex, so golden-section search on the
        log finds the global minimum; the endpoints are compared explicitly
        because the minimum often sits on the boundary.
        """
        mid = self.trace_power(0.5)
        if mid == 0.0:
            return 0.0, 0.5

        def psi(s):
            v = self.trace_power(s)
            return math.log(v) if v > 0.0 else -math.inf

        s_star, _ = golden_section_min(psi, 0.0, 1.0, S_TOL)
        best = (self.trace_power(s_star), s_star)
        for s in (0.0, 1.0):
            v = self.trace_power(s)
            if v < best[0]:
                best = (v, s)
        return best


def _check_s(s: float) -> None:
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s must lie in [0, 1], got {s}")


def overlap_L(pair: WeightedStatePair) -> float:
    return 4.0 * float(np.sum(pair.A * pair.B.T).real)


def trace_distance_T(pair: WeightedStatePair) -> float:
    return schatten_norm(pair.A - pair.B, 1)


def fidelity_F(pair: WeightedStatePair) -> float:
    M = fractional_power(pair.A, 0.5) @ fractional_power(pair.B, 0.5)
    return 2.0 * float(np.sum(singular_values(M)))


def renyi_Q_s(pair: WeightedStatePair, s: float) -> float:
    """``2 tr(A^s B^(1-s))``, with ``A^0`` the support projector of ``A``."""
    _check_s(s)
    return 2.0 * PairSpectra(pair.A, pair.B).trace_power(s)


def renyi_Q_s_curve(pair: WeightedStatePair, s_values) -> np.ndarray:
    """``renyi_Q_s`` at several exponents, sharing one eigendecomposition."""
    spectra = PairSpectra(pair.A, pair.B)
    out = []
    for s in s_values:
        _check_s(s)
        out.append(2.0 * spectra.trace_power(s))
    return np.array(out)


def hellinger_Q(pair: WeightedStatePair) -> float:
    return renyi_Q_s(pair, 0.5)


def q_min(pair: WeightedStatePair):
    """Minimum of ``renyi_Q_s`` over ``s`` in ``[0, 1]`` and its argmin.

    Orthogonal supports give ``(0.0, 0.5)`` by convention.
    """
    value, s_star = PairSpectra(pair.A, pair.B).minimize()
    return 2.0 * value, s_star


def _neg_log(x: float) -> float:
    return 0.0 - math.log(x) if x > 0.0 else math.inf


def chernoff_C(rho, sigma) -> float:
    value, _ = PairSpectra(_as_matrix(rho), _as_matrix(sigma)).minimize()
    return _neg_log(value)


def relative_entropy_S(rho, sigma) -> float:
    """``tr rho (log rho - log sigma)``; ``inf`` unless supp(rho) lies in supp(sigma)."""
    R = _as_matrix(rho)
    Sg = _as_matrix(sigma)
    if R is Sg or np.array_equal(R, Sg):
        return 0.0
    r, _, rmask = psd_spectrum(R)
    q, V, qmask = psd_spectrum(Sg)
    rho_in_sigma_basis = np.einsum("ij,ik,kj->j", V.conj(), R, V).real
    leak = float(np.sum(rho_in_sigma_basis[~qmask]))
    dim = R.shape[0]
    cutoff = dim * np.finfo(float).eps * max(float(q[0]), 1.0)
    if leak > cutoff * dim:
        return math.inf
    rp = r[rmask]
    return float(np.sum(rp * np.log(rp)) - np.sum(rho_in_sigma_basis[qmask] * np.log(q[qmask])))


def psi(rho, sigma, s: float) -> float:
    """``log tr(rho^s sigma^(1-s))``, ``-inf`` when the trace vanishes."""
    _check_s(s)
    v = PairSpectra(_as_matrix(rho), _as_matrix(sigma)).trace_power(s)
    return math.log(v) if v > 0.0 else -math.inf


def measure_report(pair: WeightedStatePair) -> MeasureReport:
    spectra = PairSpectra(pair.A, pair.B)
    qm, s_star = spectra.minimize()
    normalized = pair.normalized()
    if normalized is pair:
        C = _neg_log(2.0 * qm)
    else:
        C = chernoff_C(pair.rho, pair.sigma)
    return MeasureReport(
        L=overlap_L(pair),
        T=trace_distance_T(pair),
        F=fidelity_F(pair),
        Q=2.0 * spectra.trace_power(0.5),
        Q_min=2.0 * qm,
        s_star=s_star,
        C=C,
        S=relative_entropy_S(pair.rho, pair.sigma),
    )


def report_for_states(rho, sigma, p: float = 0.5) -> MeasureReport:
    return measure_report(make_weighted_pair(rho, sigma, p))
