"""Distance, certainty, score, uncertainty and Shannon entropy of neutrosophic triplets."""

from .core import (
    BifuzzyPair,
    KindMismatch,
    MeasureReport,
    NeutrosophicTriplet,
    OutOfRange,
    PairKind,
    SecondaryCoordinates,
    complement,
    from_secondary,
    to_secondary,
    validate,
)
from .entropy import (
    EntropyValue,
    EscortPair,
    escort,
    measure_report,
    neutrosophic_entropy,
    pair_entropy,
    pair_escort,
    shannon_fuzzy_entropy,
)
from .measures import (
    CONTRADICTION_ANCHOR,
    UNCERTAINTY_ANCHOR,
    PairDistance,
    PairMeasure,
    certainty,
    distance,
    l1_distance,
    pair_distance,
    pair_measures,
    score,
    similarity,
    uncertainty,
)

__version__ = "0.1.0"
