"""Catalog of sharp inequalities between the measures, and a verifier.

Each :class:`InequalityRecord` bundles one or more :class:`Bound` objects of
the form ``lhs <= rhs``. Bound sides are identifiers into a fixed
expression vocabulary (:data:`EXPRESSIONS`). A record is evaluated on a
:class:`WeightedStatePair`: weighted (``"W"``) records use ``(A, B)``
directly, normalized (``"N"``) records use the underlying states under a
uniform prior.
"""

import io
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from .errors import DomainMismatch, EqualityViolation
from .families import family_point
from .hot import hot_s, hot_s_inverse
from .measures import MeasureReport, PairSpectra, measure_report
from .spectral import fractional_power, schatten_norm
from .states import WeightedStatePair, make_weighted_pair, random_mixed, random_pure

DEFAULT_TOL = 1e-9
S_GRID = tuple(i / 20 for i in range(21))


def _v(x: float) -> float:
    return math.sqrt(max(0.0, 1.0 - x * x))


def _neg_log(x: float) -> float:
    return 0.0 - math.log(x) if x > 0.0 else math.inf


def _exp_neg(x: float) -> float:
    return 0.0 if math.isinf(x) else math.exp(-x)


class Values:
    """Measure values of one pair, computed lazily for the expression vocabulary."""

    def __init__(self, pair: WeightedStatePair):
        self.pair = pair
        self._report: Optional[MeasureReport] = None
        self._spectra: Optional[PairSpectra] = None
        self._ps: Optional[float] = None

    @property
    def report(self) -> MeasureReport:
        if self._report is None:
            self._report = measure_report(self.pair)
        return self._report

    def q_s(self, s: float) -> float:
        if self._spectra is None:
            self._spectra = PairSpectra(self.pair.A, self.pair.B)
        return 2.0 * self._spectra.trace_power(s)

    @property
    def powers_stormer(self) -> float:
        if self._ps is None:
            D = fractional_power(self.pair.A, 0.5) - fractional_power(self.pair.B, 0.5)
            self._ps = schatten_norm(D, 2) ** 2
        return self._ps

    def s_points(self) -> Tuple[float, ...]:
        return S_GRID + (self.report.s_star,)


# identifier -> f(values, s); s is only used by Q_s-dependent expressions
EXPRESSIONS = {
    "L": lambda v, s: v.report.L,
    "T": lambda v, s: v.report.T,
    "F": lambda v, s: v.report.F,
    "Q": lambda v, s: v.report.Q,
    "Q_min": lambda v, s: v.report.Q_min,
    "Q_s": lambda v, s: v.q_s(s),
    "C": lambda v, s: v.report.C,
    "S": lambda v, s: v.report.S,
    "2C": lambda v, s: 2.0 * v.report.C,
    "F^2": lambda v, s: v.report.F ** 2,
    "Q^2": lambda v, s: v.report.Q ** 2,
    "T^2": lambda v, s: v.report.T ** 2,
    "2T^2": lambda v, s: 2.0 * v.report.T ** 2,
    "1-T": lambda v, s: 1.0 - v.report.T,
    "1-Q": lambda v, s: 1.0 - v.report.Q,
    "1-Q_s": lambda v, s: 1.0 - v.q_s(s),
    "1-Q_min": lambda v, s: 1.0 - v.report.Q_min,
    "1-F^2": lambda v, s: 1.0 - v.report.F ** 2,
    "v(T)": lambda v, s: _v(v.report.T),
    "v(Q)": lambda v, s: _v(v.report.Q),
    "sqrt(1-L)": lambda v, s: math.sqrt(max(0.0, 1.0 - v.report.L)),
    "exp(-S)": lambda v, s: _exp_neg(v.report.S),
    "exp(-S/2)": lambda v, s: _exp_neg(v.report.S / 2.0),
    "-2log(F)": lambda v, s: 2.0 * _neg_log(v.report.F),
    "-2log(Q)": lambda v, s: 2.0 * _neg_log(v.report.Q),
    "s(T)": lambda v, s: math.inf if v.report.T >= 1.0 else hot_s(v.report.T),
    "s^-1(S)": lambda v, s: hot_s_inverse(v.report.S),
    "||A^1/2-B^1/2||_2^2": lambda v, s: v.powers_stormer,
    "||A-B||_1": lambda v, s: v.report.T,
}


@dataclass(frozen=True)
class Bound:
    """One inequality ``lhs <= rhs``.

    ``entropic`` bounds compare unbounded quantities and get a tolerance
    scaled by ``max(1, |rhs|)``. ``vacuous_if_S_infinite`` marks bounds that
    say nothing once the relative entropy is infinite.
    """

    id: str
    lhs_id: str
    rhs_id: str
    equality_families: FrozenSet[str] = frozenset()
    entropic: bool = False
    vacuous_if_S_infinite: bool = False

    @property
    def over_s(self) -> bool:
        return "Q_s" in (self.lhs_id, self.rhs_id) or "1-Q_s" in (self.lhs_id, self.rhs_id)

    def __str__(self) -> str:
        return f"{self.lhs_id} <= {self.rhs_id}"


@dataclass(frozen=True)
class InequalityRecord:
    id: str
    description: str
    domain: str
    bounds: Tuple[Bound, ...]
    reference: str

    @property
    def lhs_id(self) -> str:
        return "; ".join(b.lhs_id for b in self.bounds)

    @property
    def rhs_id(self) -> str:
        return "; ".join(b.rhs_id for b in self.bounds)

    @property
    def equality_families(self) -> FrozenSet[str]:
        return frozenset().union(*(b.equality_families for b in self.bounds))

    @property
    def sharp(self) -> bool:
        return bool(self.equality_families)


def _b(id, lhs, rhs, families="", **kw) -> Bound:
    return Bound(id, lhs, rhs, frozenset(families), **kw)


_CATALOG = (
    InequalityRecord(
        "E1", "linear overlap is at most the squared fidelity", "W",
        (_b("E1", "L", "F^2", "abc"),),
        "overlap bound via the Schatten 1/2 quasi-norm",
    ),
    InequalityRecord(
        "E2", "1 - Q_s <= T for every s in [0, 1], hence 1 - Q_min <= T", "W",
        (_b("E2-s", "1-Q_s", "T", "ac"), _b("E2-min", "1-Q_min", "T", "ac")),
        "trace inequality behind the quantum Chernoff bound",
    ),
    InequalityRecord(
        "E3", "T^2 + F^2 <= 1", "W",
        (_b("E3", "T^2", "1-F^2", "bd"),),
        "Fuchs-van de Graaf upper bound",
    ),
    InequalityRecord(
        "E4", "F^2 <= Q_s for every s in [0, 1]", "N",
        (_b("E4", "F^2", "Q_s", "ab"),),
        "Hoelder inequality for the trace norm",
    ),
    InequalityRecord(
        "E5", "Q <= F", "W",
        (_b("E5", "Q", "F", "acd"),),
        "|tr X| <= ||X||_1 for X = A^1/2 B^1/2",
    ),
    InequalityRecord(
        "T6", "exp(-S/2) <= Q", "N",
        (_b("T6", "exp(-S/2)", "Q", "a"),),
        "convexity of s -> log tr rho^s sigma^(1-s)",
    ),
    InequalityRecord(
        "T7", "S >= s(T) with s the Hiai-Ohya-Tsukuda function", "N",
        (_b("T7", "s(T)", "S", entropic=True),),
        "Hiai-Ohya-Tsukuda bound",
    ),
    InequalityRecord(
        "PS", "||A^1/2 - B^1/2||_2^2 <= ||A - B||_1", "W",
        (_b("PS", "||A^1/2-B^1/2||_2^2", "||A-B||_1"),),
        "Powers-Stormer inequality",
    ),
    InequalityRecord(
        "PK", "S >= 2 T^2", "N",
        (_b("PK", "2T^2", "S", entropic=True),),
        "Pinsker inequality",
    ),
    InequalityRecord(
        "CH1", "sandwich bound 1 - T <= F <= sqrt(1 - T^2)", "W",
        (_b("CH1-lower", "1-T", "F", "c"), _b("CH1-upper", "F", "v(T)", "bd")),
        "fidelity/trace-distance sandwich",
    ),
    InequalityRecord(
        "CH2", "1 - Q <= T <= sqrt(1 - Q^2)", "W",
        (_b("CH2-upper", "T", "v(Q)", "d"), _b("CH2-lower", "1-Q", "T", "c")),
        "chain of 1 - Q_min <= T, Q <= F and T^2 <= 1 - F^2",
    ),
    InequalityRecord(
        "CH3", "T <= sqrt(1 - L)", "W",
        (_b("CH3", "T", "sqrt(1-L)", "b"),),
        "chain of T^2 <= 1 - F^2 and L <= F^2",
    ),
    InequalityRecord(
        "CH4", "L <= Q_min, F^2 <= Q_min, Q_min <= Q <= F", "N",
        (
            _b("CH4-L", "L", "Q_min", "ab"),
            _b("CH4-F2", "F^2", "Q_min", "ab"),
            _b("CH4-Qmin", "Q_min", "Q", "bcd"),
            _b("CH4-Q", "Q", "F", "acd"),
        ),
        "chain of L <= F^2, F^2 <= Q_s and Q <= F",
    ),
    InequalityRecord(
        "CH5", "exp(-S) <= Q^2 <= F^2", "N",
        (_b("CH5-S", "exp(-S)", "Q^2", "a"), _b("CH5-F", "Q^2", "F^2", "acd")),
        "chain of exp(-S/2) <= Q and Q <= F",
    ),
    InequalityRecord(
        "CH6", "C <= S and C <= -2 log F <= -2 log Q <= 2C", "N",
        (
            _b("CH6-S", "C", "S", entropic=True),
            _b("CH6-F", "C", "-2log(F)", entropic=True),
            _b("CH6-Q", "-2log(F)", "-2log(Q)", entropic=True),
            _b("CH6-2C", "-2log(Q)", "2C", entropic=True),
        ),
        "Chernoff distance as -log Q_min",
    ),
    InequalityRecord(
        "CH7", "T <= s^-1(S)", "N",
        (_b("CH7", "T", "s^-1(S)", vacuous_if_S_infinite=True),),
        "inverse form of the Hiai-Ohya-Tsukuda bound",
    ),
)


def catalog() -> List[InequalityRecord]:
    return list(_CATALOG)


def get_record(record_id: str) -> InequalityRecord:
    for rec in _CATALOG:
        if rec.id == record_id:
            return rec
    raise KeyError(record_id)


@dataclass(frozen=True)
class BoundResult:
    bound_id: str
    lhs_value: float
    rhs_value: float
    slack: float
    holds: bool


@dataclass(frozen=True)
class EvaluationResult:
    """Outcome of one record on one pair; the reported sides are the tightest bound's."""

    record_id: str
    lhs_value: float
    rhs_value: float
    slack: float
    holds: bool
    bounds: Tuple[BoundResult, ...] = field(default=(), repr=False)


def _slack(lhs: float, rhs: float) -> float:
    if rhs == math.inf:
        return math.inf
    if lhs == math.inf:
        return -math.inf
    return rhs - lhs


def _evaluate_bound(bound: Bound, values: Values, eta: float) -> BoundResult:
    if bound.vacuous_if_S_infinite and values.report.S == math.inf:
        lhs = EXPRESSIONS[bound.lhs_id](values, None)
        return BoundResult(bound.id, lhs, math.inf, math.inf, True)
    lhs_f, rhs_f = EXPRESSIONS[bound.lhs_id], EXPRESSIONS[bound.rhs_id]
    points = values.s_points() if bound.over_s else (None,)
    worst = None
    for s in points:
        lhs, rhs = lhs_f(values, s), rhs_f(values, s)
        slack = _slack(lhs, rhs)
        if worst is None or slack < worst[2]:
            worst = (lhs, rhs, slack)
    lhs, rhs, slack = worst
    tol = eta * max(1.0, abs(rhs)) if bound.entropic and math.isfinite(rhs) else eta
    return BoundResult(bound.id, lhs, rhs, slack, slack >= -tol)


def _values_for(record: InequalityRecord, pair: WeightedStatePair, cache=None) -> Values:
    if record.domain not in ("W", "N"):
        raise DomainMismatch(f"record {record.id} has unknown domain {record.domain!r}")
    target = pair if record.domain == "W" else pair.normalized()
    if cache is None:
        return Values(target)
    key = record.domain if target is not pair else "W"
    if key not in cache:
        cache[key] = Values(target)
    return cache[key]


def evaluate(record: InequalityRecord, pair: WeightedStatePair, eta: float = DEFAULT_TOL,
             _cache=None) -> EvaluationResult:
    """Signed slack ``rhs - lhs`` of ``record`` on ``pair``; the worst bound wins."""
    if not isinstance(pair, WeightedStatePair):
        raise DomainMismatch("evaluate expects a WeightedStatePair")
    values = _values_for(record, pair, _cache)
    results = tuple(_evaluate_bound(b, values, eta) for b in record.bounds)
    worst = min(results, key=lambda r: r.slack)
    return EvaluationResult(
        record.id, worst.lhs_value, worst.rhs_value, worst.slack,
        all(r.holds for r in results), results,
    )


def evaluate_all(pair: WeightedStatePair, eta: float = DEFAULT_TOL) -> List[EvaluationResult]:
    cache: Dict[str, Values] = {}
    return [evaluate(rec, pair, eta, cache) for rec in _CATALOG]


def family_slacks(family: str, t: float, eta: float = DEFAULT_TOL) -> List[Tuple[str, float]]:
    """Slacks of every bound that lists ``family`` as an equality case."""
    pair = family_point(family, t).pair()
    cache: Dict[str, Values] = {}
    out = []
    for rec in _CATALOG:
        if family not in rec.equality_families:
            continue
        result = evaluate(rec, pair, eta, cache)
        for bound, br in zip(rec.bounds, result.bounds):
            if family in bound.equality_families:
                out.append((bound.id, br.slack))
    return out


def check_family_equalities(family: str, t: float, eta: float = DEFAULT_TOL) -> List[Tuple[str, float]]:
    """Like :func:`family_slacks`, raising :class:`EqualityViolation` if any ``|slack| > eta``."""
    slacks = family_slacks(family, t, eta)
    for bound_id, slack in slacks:
        if not abs(slack) <= eta:
            raise EqualityViolation(bound_id, family, t, slack)
    return slacks


# --- randomized verification -------------------------------------------------

RANK_DEFICIENT_FRACTION = 0.25


PRIOR_MODES = ("uniform", "random")


def sample_seed(seed: int, dim: int, index: int, prior_mode: str = "uniform") -> int:
    """Deterministic 64-bit seed for one sample of a sweep."""
    words = [seed, dim, index, PRIOR_MODES.index(prior_mode)]
    state = np.random.SeedSequence(words).generate_state(2, np.uint32)
    return int(state[0]) | (int(state[1]) << 32)


def sample_pair(dim: int, seed: int, prior_mode: str = "uniform") -> WeightedStatePair:
    """Random pair of states; one in four draws has rank-deficient members.

    Rank-deficient draws pick independent ranks in ``[1, dim]`` (rank 1 is a
    pure state) with at least one of the two below full rank.
    """
    if prior_mode not in PRIOR_MODES:
        raise ValueError(f"prior_mode must be 'uniform' or 'random', got {prior_mode!r}")
    rng = np.random.default_rng(seed)
    deficient = rng.random() < RANK_DEFICIENT_FRACTION
    if deficient:
        ranks = [int(r) for r in rng.integers(1, dim + 1, size=2)]
        if min(ranks) == dim:
            ranks[int(rng.integers(2))] = int(rng.integers(1, dim))
    else:
        ranks = [dim, dim]
    p = 0.5 if prior_mode == "uniform" else float(rng.random())
    states = []
    for rank in ranks:
        child = int(rng.integers(2**63))
        states.append(random_pure(dim, child) if rank == 1 else random_mixed(dim, rank, child))
    return make_weighted_pair(states[0], states[1], p)


@dataclass
class RecordStats:
    samples: int = 0
    violations: int = 0
    min_slack: float = math.inf
    argmin_seed: Optional[int] = None

    def add(self, slack: float, holds: bool, seed: int) -> None:
        self.samples += 1
        self.violations += 0 if holds else 1
        self._offer(slack, seed)

    def _offer(self, slack: float, seed: Optional[int]) -> None:
        # ties go to the smaller seed so that merging is order independent
        if seed is None:
            return
        if (self.argmin_seed is None or slack < self.min_slack
                or (slack == self.min_slack and seed < self.argmin_seed)):
            self.min_slack = slack
            self.argmin_seed = seed

    def merge(self, other: "RecordStats") -> "RecordStats":
        out = RecordStats(self.samples + other.samples, self.violations + other.violations)
        out._offer(self.min_slack, self.argmin_seed)
        out._offer(other.min_slack, other.argmin_seed)
        return out


def _fmt(x: float) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return format(x, ".12g")


@dataclass
class VerificationReport:
    stats: Dict[str, RecordStats]

    @property
    def passed(self) -> bool:
        return all(s.violations == 0 for s in self.stats.values())

    @property
    def total_violations(self) -> int:
        return sum(s.violations for s in self.stats.values())

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        keys = list(self.stats) + [k for k in other.stats if k not in self.stats]
        return VerificationReport({
            k: self.stats.get(k, RecordStats()).merge(other.stats.get(k, RecordStats()))
            for k in keys
        })

    def to_rows(self) -> List[dict]:
        return [
            {"record_id": k, "samples": s.samples, "violations": s.violations,
             "min_slack": _fmt(s.min_slack),
             "argmin_seed": "" if s.argmin_seed is None else str(s.argmin_seed)}
            for k, s in self.stats.items()
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("record_id,samples,violations,min_slack,argmin_seed\n")
        for row in self.to_rows():
            buf.write(f"{row['record_id']},{row['samples']},{row['violations']},"
                      f"{row['min_slack']},{row['argmin_seed']}\n")
        return buf.getvalue()


def sweep(dims, samples_per_dim: int, prior_mode: str = "uniform", seed: int = 42,
          eta: float = DEFAULT_TOL) -> VerificationReport:
    """Evaluate every record on random pairs; violations are counted, not raised."""
    dims = list(dims)
    if prior_mode not in PRIOR_MODES:
        raise ValueError(f"prior_mode must be 'uniform' or 'random', got {prior_mode!r}")
    if not dims or min(dims) < 2:
        raise ValueError("dims must be a nonempty list of integers >= 2")
    if samples_per_dim < 1:
        raise ValueError("samples_per_dim must be positive")
    stats = {rec.id: RecordStats() for rec in _CATALOG}
    for dim in dims:
        for k in range(samples_per_dim):
            s_seed = sample_seed(seed, dim, k, prior_mode)
            pair = sample_pair(dim, s_seed, prior_mode)
            for res in evaluate_all(pair, eta):
                stats[res.record_id].add(res.slack, res.holds, s_seed)
    return VerificationReport(stats)
