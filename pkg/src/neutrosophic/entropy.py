"""Escort fuzzy pair and Shannon entropy of neutrosophic information.

The escort of a triplet is the complementary fuzzy pair
``((1 + r) / 2, (1 - r) / 2)`` that keeps the triplet's score ``r``. The
neutrosophic entropy is the De Luca-Termini entropy of that pair; dividing by
``ln 2`` maps it onto ``[0, 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    BifuzzyPair,
    MeasureReport,
    NeutrosophicTriplet,
    OutOfRange,
    PairKind,
)
from .measures import certainty, score, uncertainty

__all__ = [
    "LN2",
    "EscortPair",
    "EntropyValue",
    "escort",
    "pair_escort",
    "shannon_fuzzy_entropy",
    "neutrosophic_entropy",
    "pair_entropy",
    "measure_report",
]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class EscortPair:
    escort_mu: float
    escort_nu: float


@dataclass(frozen=True)
class EntropyValue:
    nats: float
    normalized: float

    @classmethod
    def from_nats(cls, nats: float) -> "EntropyValue":
        return cls(nats, nats / LN2)


def escort(x: NeutrosophicTriplet) -> EscortPair:
    r = score(x)
    return EscortPair((1.0 + r) / 2.0, (1.0 - r) / 2.0)


def pair_escort(x: BifuzzyPair) -> EscortPair:
    """Escort pair from the reduced formula of the pair's kind."""
    if x.kind is PairKind.INTUITIONISTIC:
        den = 1.0 + x.pi
        return EscortPair((x.mu + x.pi) / den, (x.nu + x.pi) / den)
    if x.kind is PairKind.PARACONSISTENT:
        den = 1.0 + x.kappa
        return EscortPair(x.mu / den, x.nu / den)
    den = 1.0 + abs(x.delta)
    return EscortPair((x.mu + x.pi) / den, (x.nu + x.pi) / den)


def _xlogx(m: float) -> float:
    # 0 * ln(0) = 0
    return 0.0 if m == 0.0 else m * math.log(m)


def shannon_fuzzy_entropy(m: float) -> float:
    """De Luca-Termini entropy ``-m ln m - (1 - m) ln(1 - m)`` in nats."""
    m = float(m)
    if not (0.0 <= m <= 1.0):
        raise OutOfRange("m", m)
    if m == 0.0 or m == 1.0:
        return 0.0
    return -_xlogx(m) - _xlogx(1.0 - m)


def neutrosophic_entropy(x: NeutrosophicTriplet) -> EntropyValue:
    return EntropyValue.from_nats(shannon_fuzzy_entropy(escort(x).escort_mu))


def pair_entropy(x: BifuzzyPair) -> EntropyValue:
    e = pair_escort(x)
    return EntropyValue.from_nats(-_xlogx(e.escort_mu) - _xlogx(e.escort_nu))


def measure_report(x: NeutrosophicTriplet) -> MeasureReport:
    """Every scalar measure of ``x`` in one record."""
    e = escort(x)
    h = neutrosophic_entropy(x)
    return MeasureReport(
        input=x,
        certainty=certainty(x),
        score=score(x),
        uncertainty=uncertainty(x),
        escort_mu=e.escort_mu,
        escort_nu=e.escort_nu,
        entropy_nats=h.nats,
        entropy_normalized=h.normalized,
    )
