"""Neutrosophic triplets, their secondary coordinates and bifuzzy pairs.

A neutrosophic triplet ``(mu, omega, nu)`` holds the degrees of truth,
indeterminacy and falsity, each in ``[0, 1]`` with no constraint on the sum.
The secondary space ``(tau, delta, omega)`` uses the net truth
``tau = mu - nu`` and the bifuzzy definedness ``delta = mu + nu - 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "OutOfRange",
    "KindMismatch",
    "PairKind",
    "NeutrosophicTriplet",
    "SecondaryCoordinates",
    "BifuzzyPair",
    "MeasureReport",
    "validate",
    "complement",
    "to_secondary",
    "from_secondary",
]


class OutOfRange(ValueError):
    """A component lies outside its admissible interval."""

    def __init__(self, component: str, value: float, low: float = 0.0, high: float = 1.0):
        self.component = component
        self.value = value
        super().__init__(f"{component}={value!r} is outside [{low:g}, {high:g}]")


class KindMismatch(ValueError):
    """A bifuzzy pair violates the sign condition of its declared kind."""


class PairKind(str, enum.Enum):
    BIFUZZY = "bifuzzy"
    INTUITIONISTIC = "intuitionistic"
    PARACONSISTENT = "paraconsistent"


def _check_unit(component: str, value: float) -> float:
    value = float(value)
    # `not (a <= v <= b)` also rejects NaN
    if not (0.0 <= value <= 1.0):
        raise OutOfRange(component, value)
    return value


@dataclass(frozen=True)
class NeutrosophicTriplet:
    mu: float
    omega: float
    nu: float

    def __post_init__(self):
        object.__setattr__(self, "mu", _check_unit("mu", self.mu))
        object.__setattr__(self, "omega", _check_unit("omega", self.omega))
        object.__setattr__(self, "nu", _check_unit("nu", self.nu))

    def astuple(self) -> tuple[float, float, float]:
        return (self.mu, self.omega, self.nu)

    @property
    def tau(self) -> float:
        return self.mu - self.nu

    @property
    def delta(self) -> float:
        return self.mu + self.nu - 1.0


@dataclass(frozen=True)
class SecondaryCoordinates:
    """Point of the ``(tau, delta, omega)`` space.

    ``pi`` (incompleteness) and ``kappa`` (contradiction) are always derived
    from ``delta`` and never stored.
    """

    tau: float
    delta: float
    omega: float

    @property
    def pi(self) -> float:
        return max(-self.delta, 0.0)

    @property
    def kappa(self) -> float:
        return max(self.delta, 0.0)


@dataclass(frozen=True)
class BifuzzyPair:
    """A ``(mu, nu)`` pair tagged with its information kind.

    Intuitionistic pairs need ``mu + nu <= 1`` and paraconsistent pairs need
    ``mu + nu >= 1``; ``mu + nu == 1`` is legal for both.
    """

    mu: float
    nu: float
    kind: PairKind = PairKind.BIFUZZY

    def __post_init__(self):
        object.__setattr__(self, "mu", _check_unit("mu", self.mu))
        object.__setattr__(self, "nu", _check_unit("nu", self.nu))
        kind = PairKind(self.kind)
        object.__setattr__(self, "kind", kind)
        delta = self.delta
        if kind is PairKind.INTUITIONISTIC and delta > 0.0:
            raise KindMismatch(
                f"intuitionistic pair needs mu + nu <= 1, got mu={self.mu!r}, nu={self.nu!r}"
            )
        if kind is PairKind.PARACONSISTENT and delta < 0.0:
            raise KindMismatch(
                f"paraconsistent pair needs mu + nu >= 1, got mu={self.mu!r}, nu={self.nu!r}"
            )

    @property
    def tau(self) -> float:
        return self.mu - self.nu

    @property
    def delta(self) -> float:
        return self.mu + self.nu - 1.0

    @property
    def pi(self) -> float:
        return max(-self.delta, 0.0)

    @property
    def kappa(self) -> float:
        return max(self.delta, 0.0)

    def as_triplet(self) -> NeutrosophicTriplet:
        """The triplet ``(mu, 0, nu)`` this pair embeds into."""
        return NeutrosophicTriplet(self.mu, 0.0, self.nu)


@dataclass(frozen=True)
class MeasureReport:
    input: NeutrosophicTriplet
    certainty: float
    score: float
    uncertainty: float
    escort_mu: float
    escort_nu: float
    entropy_nats: float
    entropy_normalized: float


def validate(mu: float, omega: float, nu: float) -> NeutrosophicTriplet:
    """Build a triplet, raising :class:`OutOfRange` on the first bad component."""
    return NeutrosophicTriplet(mu, omega, nu)


def complement(x: NeutrosophicTriplet) -> NeutrosophicTriplet:
    return NeutrosophicTriplet(x.nu, x.omega, x.mu)


def to_secondary(x: NeutrosophicTriplet) -> SecondaryCoordinates:
    return SecondaryCoordinates(tau=x.mu - x.nu, delta=x.mu + x.nu - 1.0, omega=x.omega)


def from_secondary(tau: float, delta: float, omega: float) -> NeutrosophicTriplet:
    """Map ``(tau, delta, omega)`` back to ``(mu, omega, nu)``.

    Raises :class:`OutOfRange` when the implied ``mu`` or ``nu`` falls
    outside ``[0, 1]``. Results within ``ROUNDING_SLACK`` of a bound are
    rounding residue of the transform and are snapped onto it.
    """
    mu = _snap((1.0 + delta + tau) / 2.0)
    nu = _snap((1.0 + delta - tau) / 2.0)
    return NeutrosophicTriplet(mu, omega, nu)


ROUNDING_SLACK = 1e-15


def _snap(v: float) -> float:
    if -ROUNDING_SLACK <= v < 0.0:
        return 0.0
    if 1.0 < v <= 1.0 + ROUNDING_SLACK:
        return 1.0
    return v
