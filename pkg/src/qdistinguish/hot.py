"""The sharp lower bound of relative entropy in terms of trace distance.

``hot_s(x)`` is the smallest relative entropy between two binary
distributions at total-variation distance ``x``. It is bracketed below by
Pinsker's ``2 x**2`` and above by ``-log(1 - x)``.
"""

import math

from .errors import DomainError
from .optimize import bisect_increasing, golden_section_min

R_GUARD = 1e-12
R_TOL = 1e-11
X_MAX = 1.0 - 1e-12
INVERSE_TOL = 1e-10


def _check_x(x: float) -> None:
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x}")


def binary_relative_entropy(x: float, r: float) -> float:
    """``S(diag(r - x, 1 - r + x) || diag(r, 1 - r))`` for ``x < r < 1``."""
    first = (r - x) * math.log1p(-x / r) if r > x else 0.0
    return first + (1.0 - r + x) * math.log1p(x / (1.0 - r))


def hot_s_minimizer(x: float):
    """Return ``(hot_s(x), r)`` where ``r`` attains the minimum."""
    _check_x(x)
    if x == 0.0:
        return 0.0, 0.5
    guard = min(R_GUARD, (1.0 - x) / 4.0)
    r, value = golden_section_min(
        lambda r: binary_relative_entropy(x, r), x + guard, 1.0 - guard, R_TOL
    )
    # for x close to 1 the infimum sits in the limit r -> x, below anything
    # the guarded search can reach
    boundary = -math.log1p(-x)
    if boundary < value:
        return boundary, x
    return max(value, 0.0), r


def hot_s(x: float) -> float:
    return hot_s_minimizer(x)[0]


def hot_s_inverse(y: float) -> float:
    """The ``x`` in ``[0, 1)`` with ``hot_s(x) == y``; saturates at ``1 - 1e-12``."""
    if math.isnan(y) or y < 0.0:
        raise DomainError(f"y must be nonnegative, got {y}")
    if y == 0.0:
        return 0.0
    if math.isinf(y) or y >= hot_s(X_MAX):
        return X_MAX
    # 2x^2 <= s(x) <= -log(1-x) brackets the root
    lo = -math.expm1(-y)
    hi = min(math.sqrt(y / 2.0), X_MAX)
    if hot_s(lo) > y:
        lo = 0.0
    if hot_s(hi) < y:
        hi = X_MAX
    return bisect_increasing(hot_s, y, lo, hi, INVERSE_TOL)


def hot_series(x: float) -> float:
    _check_x(x)
    x2 = x * x
    return 2.0 * x2 + (4.0 / 9.0) * x2**2 + (32.0 / 135.0) * x2**3


def pinsker_lower(x: float) -> float:
    _check_x(x)
    return 2.0 * x * x


def hot_upper(x: float) -> float:
    _check_x(x)
    return -math.log1p(-x)
