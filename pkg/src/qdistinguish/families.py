"""Four one-parameter families of state pairs with closed-form measures.

Each family attains equality in a different subset of the catalogued bounds:

* ``a``: ``rho = diag(1, 0)``, ``sigma = diag(t, 1 - t)``
* ``b``: two pure qubit states with overlap ``|<psi|phi>|^2 = t``
* ``c``: ``rho = diag(1 - t, t, 0)``, ``sigma = diag(1 - t, 0, t)``
* ``d``: ``rho = diag(1 - t, t)``, ``sigma = diag(t, 1 - t)``
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParamOutOfRange
from .measures import MeasureReport
from .states import DensityOperator, make_weighted_pair, validate_density

FAMILIES = ("a", "b", "c", "d")


@dataclass(frozen=True, eq=False)
class FamilyPoint:
    family: str
    t: float
    rho: DensityOperator
    sigma: DensityOperator
    expected: MeasureReport

    def pair(self, p: float = 0.5):
        return make_weighted_pair(self.rho, self.sigma, p)


def _neg_log(x: float) -> float:
    return 0.0 - math.log(x) if x > 0.0 else math.inf


def _states(family: str, t: float):
    if family == "a":
        return np.diag([1.0, 0.0]), np.diag([t, 1.0 - t])
    if family == "b":
        c, s = math.sqrt(t), math.sqrt(1.0 - t)
        return np.diag([1.0, 0.0]), np.array([[c * c, c * s], [c * s, s * s]])
    if family == "c":
        return np.diag([1.0 - t, t, 0.0]), np.diag([1.0 - t, 0.0, t])
    return np.diag([1.0 - t, t]), np.diag([t, 1.0 - t])


def _expected(family: str, t: float) -> MeasureReport:
    if family == "a":
        return MeasureReport(
            L=t, T=1.0 - t, F=math.sqrt(t), Q=math.sqrt(t), Q_min=t,
            s_star=0.0 if 0.0 < t < 1.0 else None,
            C=_neg_log(t), S=_neg_log(t),
        )
    if family == "b":
        return MeasureReport(
            L=t, T=math.sqrt(1.0 - t), F=math.sqrt(t), Q=t, Q_min=t, s_star=None,
            C=_neg_log(t), S=0.0 if t == 1.0 else math.inf,
        )
    if family == "c":
        return MeasureReport(
            L=(1.0 - t) ** 2, T=t, F=1.0 - t, Q=1.0 - t, Q_min=1.0 - t, s_star=None,
            C=_neg_log(1.0 - t), S=0.0 if t == 0.0 else math.inf,
        )
    f = 2.0 * math.sqrt(t * (1.0 - t))
    if t in (0.0, 1.0):
        S = math.inf
    elif t == 0.5:
        S = 0.0
    else:
        S = (2.0 * t - 1.0) * math.log(t / (1.0 - t))
    return MeasureReport(
        L=f * f / 2.0, T=abs(1.0 - 2.0 * t), F=f, Q=f, Q_min=f,
        s_star=0.5 if 0.0 < t < 1.0 and t != 0.5 else None,
        C=_neg_log(f), S=S,
    )


def family_point(family: str, t: float) -> FamilyPoint:
    if family not in FAMILIES:
        raise ParamOutOfRange(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not 0.0 <= t <= 1.0:
        raise ParamOutOfRange(f"t must lie in [0, 1], got {t}")
    t = float(t)
    rho, sigma = _states(family, t)
    return FamilyPoint(family, t, validate_density(rho), validate_density(sigma), _expected(family, t))
