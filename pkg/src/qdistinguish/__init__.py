"""Quantum state distinguishability measures and the sharp inequalities between them."""

from .catalog import (
    InequalityRecord,
    VerificationReport,
    catalog,
    check_family_equalities,
    evaluate,
    evaluate_all,
    sweep,
)
from .families import FAMILIES, FamilyPoint, family_point
from .hot import hot_s, hot_s_inverse, hot_series, hot_upper, pinsker_lower
from .measures import (
    MeasureReport,
    chernoff_C,
    fidelity_F,
    hellinger_Q,
    measure_report,
    overlap_L,
    psi,
    q_min,
    relative_entropy_S,
    renyi_Q_s,
    trace_distance_T,
)
from .spectral import (
    SpectralDecomposition,
    fractional_power,
    jordan_parts,
    log_on_support,
    schatten_norm,
    singular_values,
    spectral_decompose,
)
from .states import (
    DensityOperator,
    WeightedStatePair,
    make_weighted_pair,
    random_mixed,
    random_pure,
    read_matrix,
    validate_density,
    write_matrix,
)

__version__ = "0.1.0"
