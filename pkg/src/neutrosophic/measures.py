"""Distance, similarity, certainty, score and uncertainty of triplets.

``distance`` is a normalized dissimilarity in ``[0, 1]``. It is symmetric and
vanishes only on identical triplets, but no triangle inequality is claimed.
"""

from __future__ import annotations

import enum

from .core import (
    BifuzzyPair,
    KindMismatch,
    NeutrosophicTriplet,
    PairKind,
)

__all__ = [
    "CONTRADICTION_ANCHOR",
    "UNCERTAINTY_ANCHOR",
    "PairMeasure",
    "PairDistance",
    "l1_distance",
    "distance",
    "similarity",
    "certainty",
    "score",
    "uncertainty",
    "pair_measures",
    "pair_distance",
]

#: Full contradiction ``(1, 0, 1)``.
CONTRADICTION_ANCHOR = NeutrosophicTriplet(1.0, 0.0, 1.0)
#: Full incompleteness ``(0, 0, 0)``.
UNCERTAINTY_ANCHOR = NeutrosophicTriplet(0.0, 0.0, 0.0)


class PairMeasure(str, enum.Enum):
    CERTAINTY = "certainty"
    SCORE = "score"
    UNCERTAINTY = "uncertainty"


class PairDistance(str, enum.Enum):
    DISTANCE = "distance"
    SIMILARITY = "similarity"


def l1_distance(p1: NeutrosophicTriplet, p2: NeutrosophicTriplet) -> float:
    return abs(p1.mu - p2.mu) + abs(p1.omega - p2.omega) + abs(p1.nu - p2.nu)


def distance(p1: NeutrosophicTriplet, p2: NeutrosophicTriplet) -> float:
    """Normalized L1 dissimilarity between two triplets.

    The L1 gap is divided by the longer of the two detours through the
    contradiction anchor ``(1, 0, 1)`` and the incompleteness anchor
    ``(0, 0, 0)``, which reduces to ``2 + |delta1 + delta2| + omega1 + omega2``.
    """
    delta1 = p1.mu + p1.nu - 1.0
    delta2 = p2.mu + p2.nu - 1.0
    # grouped so that swapping the arguments is bitwise symmetric
    den = 2.0 + abs(delta1 + delta2) + (p1.omega + p2.omega)
    return l1_distance(p1, p2) / den


def similarity(p1: NeutrosophicTriplet, p2: NeutrosophicTriplet) -> float:
    return 1.0 - distance(p1, p2)


def certainty(x: NeutrosophicTriplet) -> float:
    """Dissimilarity between ``x`` and its complement, ``|tau| / (1 + |delta| + omega)``."""
    return abs(x.mu - x.nu) / (1.0 + abs(x.mu + x.nu - 1.0) + x.omega)


def score(x: NeutrosophicTriplet) -> float:
    """Signed certainty in ``[-1, 1]``: ``tau / (1 + |delta| + omega)``."""
    return (x.mu - x.nu) / (1.0 + abs(x.mu + x.nu - 1.0) + x.omega)


def uncertainty(x: NeutrosophicTriplet) -> float:
    return 1.0 - certainty(x)


def _pair_denominator(x: BifuzzyPair) -> float:
    # 1 + |delta| written with the kind's own parameter
    if x.kind is PairKind.INTUITIONISTIC:
        return 1.0 + x.pi
    if x.kind is PairKind.PARACONSISTENT:
        return 1.0 + x.kappa
    return 1.0 + abs(x.delta)


def pair_measures(x: BifuzzyPair, which: PairMeasure | str) -> float:
    """Certainty, score or uncertainty of a bifuzzy pair.

    Uses the reduced formula for the pair's kind, e.g. ``tau / (1 + pi)`` for
    an intuitionistic score. Each agrees with the triplet measure at
    ``(mu, 0, nu)``.
    """
    which = PairMeasure(which)
    ratio = x.tau / _pair_denominator(x)
    if which is PairMeasure.SCORE:
        return ratio
    if which is PairMeasure.CERTAINTY:
        return abs(ratio)
    return 1.0 - abs(x.tau) / _pair_denominator(x)


def pair_distance(p1: BifuzzyPair, p2: BifuzzyPair, which: PairDistance | str) -> float:
    which = PairDistance(which)
    if p1.kind is not p2.kind:
        raise KindMismatch(f"cannot compare a {p1.kind.value} pair with a {p2.kind.value} pair")
    num = abs(p1.mu - p2.mu) + abs(p1.nu - p2.nu)
    if p1.kind is PairKind.INTUITIONISTIC:
        den = 2.0 + p1.pi + p2.pi
    elif p1.kind is PairKind.PARACONSISTENT:
        den = 2.0 + p1.kappa + p2.kappa
    else:
        den = 2.0 + abs(p1.delta + p2.delta)
    d = num / den
    return d if which is PairDistance.DISTANCE else 1.0 - d
