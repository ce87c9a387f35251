"""Independent oracles and lattice checks for the measures and the entropy.

The oracles here recompute each quantity by a route that does not share code
with the library path: the distance from its detour definition, the escort
and the entropy from their alternative closed forms, and the entropy
derivatives both analytically and by finite differences.

:func:`run_property_suite` sweeps a regular lattice of the unit cube and
returns one :class:`CheckReport` per check, sorted by name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Sequence

import numpy as np

from .core import (
    BifuzzyPair,
    NeutrosophicTriplet,
    OutOfRange,
    PairKind,
    complement,
    from_secondary,
    to_secondary,
)
from .entropy import (
    LN2,
    escort,
    neutrosophic_entropy,
    pair_entropy,
    pair_escort,
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

__all__ = [
    "DegenerateInput",
    "GridSpec",
    "Failure",
    "CheckReport",
    "LCG",
    "distance_oracle",
    "anchor_path_lengths",
    "escort_closed_form",
    "entropy_forms",
    "certainty_gradient",
    "entropy_gradient",
    "entropy_gradient_chain",
    "finite_difference_signs",
    "run_property_suite",
    "SCORE_CHAIN",
]

# Cap on failure records kept per report; failure_count keeps the full tally.
MAX_RECORDED_FAILURES = 50


class DegenerateInput(ValueError):
    """The point sits on the ``tau = 0`` kink where ``|tau|`` has no derivative."""


# --------------------------------------------------------------------------
# configuration and reports


@dataclass(frozen=True)
class GridSpec:
    """Regular lattice of the unit cube with spacing ``step``.

    ``1 / step`` must be an integer (within 1e-12) so that 0 and 1 are both
    lattice values. Pair checks draw ``pair_samples`` ordered pairs with a
    64-bit linear congruential generator seeded by ``seed``.
    """

    step: float = 0.1
    include_corners: bool = True
    include_center: bool = True
    pair_samples: int = 100_000
    seed: int = 20180705

    def __post_init__(self):
        step = float(self.step)
        if not (0.0 < step <= 1.0):
            raise ValueError(f"grid step must lie in (0, 1], got {step!r}")
        n = round(1.0 / step)
        if abs(n * step - 1.0) > 1e-12:
            raise ValueError(f"grid step {step!r} does not divide 1")
        if self.pair_samples < 1:
            raise ValueError("pair_samples must be positive")

    @property
    def divisions(self) -> int:
        return round(1.0 / self.step)

    def indices(self) -> list[tuple[int, int, int]]:
        """Integer lattice coordinates ``(i_mu, i_omega, i_nu)`` in ``0..n``."""
        n = self.divisions
        return list(product(range(n + 1), repeat=3))

    def points(self) -> list[NeutrosophicTriplet]:
        n = self.divisions
        pts = [NeutrosophicTriplet(i / n, j / n, k / n) for i, j, k in self.indices()]
        extra = []
        if self.include_corners:
            extra.extend(NeutrosophicTriplet(*c) for c in product((0.0, 1.0), repeat=3))
        if self.include_center:
            extra.append(NeutrosophicTriplet(0.5, 0.5, 0.5))
        seen = {p.astuple() for p in pts}
        for p in extra:
            if p.astuple() not in seen:
                seen.add(p.astuple())
                pts.append(p)
        return pts


@dataclass(frozen=True)
class Failure:
    inputs: tuple
    relation: str
    observed: tuple

    def to_dict(self) -> dict:
        return {
            "inputs": [list(p) for p in self.inputs],
            "relation": self.relation,
            "observed": list(self.observed),
        }


@dataclass
class CheckReport:
    """Outcome of one check.

    ``failures`` holds the cases whose violation exceeds ``tolerance``;
    ``max_violation`` is the largest violation over every case run.
    Report-only checks (``mandatory=False``) never fail a suite.
    """

    check_name: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    max_violation: float = 0.0
    tolerance: float = 0.0
    mandatory: bool = True
    failure_count: int = 0
    skipped: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, violation: float, inputs: tuple, relation: str, observed: tuple) -> None:
        self.cases_run += 1
        if violation > self.max_violation or math.isnan(violation):
            self.max_violation = violation if not math.isnan(violation) else math.inf
        if not violation <= self.tolerance:
            self.failure_count += 1
            self.failures.append(Failure(inputs, relation, observed))

    def finish(self) -> "CheckReport":
        self.failures.sort(key=lambda f: f.inputs)
        del self.failures[MAX_RECORDED_FAILURES:]
        return self

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "mandatory": self.mandatory,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "skipped": self.skipped,
            "tolerance": self.tolerance,
            "max_violation": self.max_violation,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
            "notes": dict(sorted(self.notes.items())),
        }


class LCG:
    """Knuth's MMIX generator: ``s <- a*s + c mod 2**64``."""

    A = 6364136223846793005
    C = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def below(self, n: int) -> int:
        self.state = (self.A * self.state + self.C) & self.MASK
        # high bits have the longest period
        return (self.state >> 32) % n


# --------------------------------------------------------------------------
# oracles


def anchor_path_lengths(p1: NeutrosophicTriplet, p2: NeutrosophicTriplet) -> tuple[float, float, float, float]:
    """``d(P1, C), d(C, P2), d(P1, U), d(U, P2)`` from their expanded forms."""
    return (
        2.0 - p1.mu - p1.nu + p1.omega,
        2.0 - p2.mu - p2.nu + p2.omega,
        p1.mu + p1.omega + p1.nu,
        p2.mu + p2.omega + p2.nu,
    )


def distance_oracle(p1: NeutrosophicTriplet, p2: NeutrosophicTriplet) -> float:
    """Distance from its definition: L1 gap over the longest anchor detour."""
    d1c, dc2, d1u, du2 = anchor_path_lengths(p1, p2)
    return l1_distance(p1, p2) / max(d1c + dc2, d1u + du2)


def escort_closed_form(x: NeutrosophicTriplet) -> tuple[float, float]:
    """Escort pair written with ``pi`` and ``omega / 2``."""
    s = to_secondary(x)
    den = 1.0 + abs(s.delta) + x.omega
    return (x.mu + s.pi + x.omega / 2.0) / den, (x.nu + s.pi + x.omega / 2.0) / den


def _h2(a: float, b: float) -> float:
    return -sum(0.0 if v == 0.0 else v * math.log(v) for v in (a, b))


def entropy_forms(x: NeutrosophicTriplet) -> dict[str, float]:
    """Entropy in nats from four independent printed forms.

    ``closed``: the escort closed form in ``mu, nu, pi, delta, omega``;
    ``score``: in ``r``; ``abs_score``: in ``|r|``; ``certainty``: in ``g``.
    """
    s = to_secondary(x)
    den = 1.0 + abs(s.delta) + s.omega
    r = s.tau / den
    g = abs(s.tau) / den
    return {
        "closed": _h2((x.mu + s.pi + x.omega / 2.0) / den, (x.nu + s.pi + x.omega / 2.0) / den),
        "score": _h2((1.0 + r) / 2.0, (1.0 - r) / 2.0),
        "abs_score": _h2((1.0 + abs(r)) / 2.0, (1.0 - abs(r)) / 2.0),
        "certainty": _h2((1.0 + g) / 2.0, (1.0 - g) / 2.0),
    }


def certainty_gradient(abs_tau: float, abs_delta: float, omega: float) -> tuple[float, float, float]:
    """Partials of the certainty along ``|tau|``, ``|delta|``, ``omega``."""
    den = 1.0 + abs_delta + omega
    return 1.0 / den, -abs_tau / den**2, -abs_tau / den**2


def _log_ratio(g: float) -> float:
    # the partials diverge at full certainty
    return -math.inf if g >= 1.0 else math.log((1.0 - g) / (1.0 + g))


def entropy_gradient(abs_tau: float, abs_delta: float, omega: float) -> tuple[float, float, float]:
    """Direct analytic partials of the entropy (nats) along ``|tau|, |delta|, omega``."""
    den = 1.0 + abs_delta + omega
    lr = _log_ratio(abs_tau / den)
    return (
        0.5 / den * lr,
        -0.5 * abs_tau / den**2 * lr,
        -0.5 * abs_tau / den**2 * lr,
    )


def entropy_gradient_chain(abs_tau: float, abs_delta: float, omega: float) -> tuple[float, float, float]:
    """Same partials composed as ``dE/dg * dg/d(.)``."""
    g = abs_tau / (1.0 + abs_delta + omega)
    de_dg = 0.5 * _log_ratio(g)
    return tuple(de_dg * v for v in certainty_gradient(abs_tau, abs_delta, omega))


# --------------------------------------------------------------------------
# finite differences

_FD_AXES = ("abs_tau", "abs_delta", "omega")
# expected sign of dE along each axis
_FD_SIGNS = (-1.0, 1.0, 1.0)


@dataclass(frozen=True)
class _FDProbe:
    axis: str
    scheme: str  # "central", "forward", "backward" or "skipped"
    estimate: float
    analytic: float


def _fd_entropy(sign_tau: float, sign_delta: float, coords: Sequence[float]) -> float | None:
    a, b, w = coords
    if a < 0.0 or b < 0.0:
        return None
    try:
        x = from_secondary(sign_tau * a, sign_delta * b, w)
    except OutOfRange:
        return None
    return neutrosophic_entropy(x).nats


def _fd_probes(x: NeutrosophicTriplet, h: float) -> list[_FDProbe]:
    s = to_secondary(x)
    if s.tau == 0.0:
        raise DegenerateInput(f"tau = 0 at {x.astuple()}; |tau| is not differentiable there")
    sign_tau = math.copysign(1.0, s.tau)
    sign_delta = -1.0 if s.delta < 0.0 else 1.0
    base = [abs(s.tau), abs(s.delta), s.omega]
    analytic = entropy_gradient(*base)
    f0 = neutrosophic_entropy(x).nats
    probes = []
    for k, axis in enumerate(_FD_AXES):
        up, down = list(base), list(base)
        up[k] += h
        down[k] -= h
        fp = _fd_entropy(sign_tau, sign_delta, up)
        fm = _fd_entropy(sign_tau, sign_delta, down)
        if fp is not None and fm is not None:
            probes.append(_FDProbe(axis, "central", (fp - fm) / (2.0 * h), analytic[k]))
        elif fp is not None:
            probes.append(_FDProbe(axis, "forward", (fp - f0) / h, analytic[k]))
        elif fm is not None:
            probes.append(_FDProbe(axis, "backward", (f0 - fm) / h, analytic[k]))
        else:
            probes.append(_FDProbe(axis, "skipped", math.nan, analytic[k]))
    return probes


def _sign_violation(axis: str, estimate: float) -> float:
    expected = _FD_SIGNS[_FD_AXES.index(axis)]
    return max(0.0, -expected * estimate)


def _relative_error(estimate: float, analytic: float) -> float:
    return abs(estimate - analytic) / abs(analytic)


def finite_difference_signs(
    x: NeutrosophicTriplet,
    h: float = 1e-4,
    slack: float | None = None,
    rel_tol: float | None = None,
) -> CheckReport:
    """Check the entropy derivative signs at ``x`` by finite differences.

    The entropy must decrease along ``|tau|`` and increase along ``|delta|``
    and ``omega``. Central differences are used where the stencil stays
    admissible, one-sided ones otherwise (tagged in ``notes``). Central
    estimates whose analytic value exceeds 1e-3 in magnitude are also
    compared with the analytic partials.

    Sign checks use ``slack`` (default ``10 h**2``) and the comparison uses
    ``rel_tol`` (default ``10 h**2``). Each violation is divided by its own
    tolerance, so the report tolerance is 1.
    """
    if not (0.0 < h <= 0.01):
        raise ValueError(f"finite-difference step must lie in (0, 0.01], got {h!r}")
    slack = 10.0 * h * h if slack is None else slack
    rel_tol = 10.0 * h * h if rel_tol is None else rel_tol
    report = CheckReport("finite_difference_signs", tolerance=1.0)
    point = (x.astuple(),)
    for p in _fd_probes(x, h):
        report.notes[p.axis] = p.scheme
        if p.scheme == "skipped":
            report.skipped += 1
            continue
        report.notes[f"d_{p.axis}"] = p.estimate
        report.record(
            _sign_violation(p.axis, p.estimate) / slack,
            point,
            f"sign of dE/d{p.axis}",
            (p.estimate,),
        )
        if p.scheme == "central" and abs(p.analytic) > 1e-3:
            report.record(
                _relative_error(p.estimate, p.analytic) / rel_tol,
                point,
                f"finite difference ~ analytic dE/d{p.axis}",
                (p.estimate, p.analytic),
            )
    return report.finish()


# --------------------------------------------------------------------------
# suite


SCORE_CHAIN: tuple[tuple[tuple[float, float, float], float], ...] = (
    ((1.0, 0.0, 0.0), 1.0),
    ((1.0, 1.0, 0.0), 0.5),
    ((1.0, 1.0, 1.0), 0.0),
    ((1.0, 0.0, 1.0), 0.0),
    ((0.0, 1.0, 0.0), 0.0),
    ((0.0, 0.0, 0.0), 0.0),
    ((0.0, 1.0, 1.0), -0.5),
    ((0.0, 0.0, 1.0), -1.0),
)
# relation between consecutive chain entries
_SCORE_CHAIN_RELATIONS = (">", ">", "=", "=", "=", ">", ">")

TOL_EXACT = 1e-15
TOL_ALGEBRA = 1e-12
# ties in the monotonicity grids differ only by rounding
TOL_MONOTONE = 1e-12


def _equality(report: CheckReport, a: float, b: float, inputs: tuple, relation: str) -> None:
    report.record(abs(a - b), inputs, relation, (a, b))


def _pair_stream(grid: GridSpec, n_points: int) -> Iterator[tuple[int, int]]:
    rng = LCG(grid.seed)
    for _ in range(grid.pair_samples):
        yield rng.below(n_points), rng.below(n_points)


def _core_checks(points: list[NeutrosophicTriplet]) -> list[CheckReport]:
    eq15 = CheckReport("core_eq_mu_nu_pi_kappa", tolerance=TOL_ALGEBRA)
    roundtrip = CheckReport("core_secondary_round_trip", tolerance=TOL_ALGEBRA)
    involution = CheckReport("core_complement_involution", tolerance=0.0)
    antisym = CheckReport("core_complement_tau_antisymmetry", tolerance=TOL_EXACT)
    exclusive = CheckReport("core_pi_kappa_exclusive", tolerance=0.0)
    for x in points:
        pt = (x.astuple(),)
        s = to_secondary(x)
        _equality(eq15, x.mu + x.nu + s.pi - s.kappa, 1.0, pt, "mu + nu + pi - kappa = 1")
        back = from_secondary(s.tau, s.delta, s.omega)
        roundtrip.record(
            max(abs(u - v) for u, v in zip(back.astuple(), x.astuple())),
            pt,
            "from_secondary(to_secondary(x)) = x",
            back.astuple(),
        )
        cc = complement(complement(x))
        involution.record(0.0 if cc == x else 1.0, pt, "complement(complement(x)) = x", cc.astuple())
        sc = to_secondary(complement(x))
        antisym.record(
            max(abs(sc.tau + s.tau), abs(sc.delta - s.delta), abs(sc.omega - s.omega)),
            pt,
            "complement flips tau, keeps delta and omega",
            (sc.tau, s.tau),
        )
        bad = min(s.pi, 0.0) + min(s.kappa, 0.0)
        exclusive.record(abs(bad) + s.pi * s.kappa, pt, "pi >= 0, kappa >= 0, pi * kappa = 0", (s.pi, s.kappa))
    return [eq15, roundtrip, involution, antisym, exclusive]


def _pointwise_measure_checks(points: list[NeutrosophicTriplet]) -> list[CheckReport]:
    g_is_d = CheckReport("certainty_is_distance_to_complement", tolerance=TOL_EXACT)
    g_sym = CheckReport("certainty_symmetry", tolerance=0.0)
    g_abs_r = CheckReport("certainty_is_abs_score", tolerance=TOL_EXACT)
    e_neg = CheckReport("uncertainty_is_one_minus_certainty", tolerance=TOL_EXACT)
    r_anti = CheckReport("score_antisymmetry", tolerance=TOL_EXACT)
    ranges = CheckReport("measure_ranges", tolerance=0.0)
    self_d = CheckReport("distance_self_zero", tolerance=0.0)
    for x in points:
        pt = (x.astuple(),)
        xc = complement(x)
        g, r, e = certainty(x), score(x), uncertainty(x)
        _equality(g_is_d, g, distance(x, xc), pt, "certainty(x) = distance(x, complement(x))")
        _equality(g_sym, g, certainty(xc), pt, "certainty(mu, omega, nu) = certainty(nu, omega, mu)")
        _equality(g_abs_r, g, abs(r), pt, "certainty = |score|")
        _equality(e_neg, e, 1.0 - g, pt, "uncertainty = 1 - certainty")
        rc = score(xc)
        r_anti.record(abs(r + rc), pt, "score(complement(x)) = -score(x)", (r, rc))
        out = max(0.0, -g, g - 1.0, -e, e - 1.0, -1.0 - r, r - 1.0)
        ranges.record(out, pt, "certainty, uncertainty in [0,1]; score in [-1,1]", (g, r, e))
        d = distance(x, x)
        self_d.record(abs(d), pt, "distance(x, x) = 0", (d,))
    return [g_is_d, g_sym, g_abs_r, e_neg, r_anti, ranges, self_d]


def _boundary_checks(points: list[NeutrosophicTriplet]) -> list[CheckReport]:
    corners = CheckReport("boundary_full_truth_falsity", tolerance=TOL_EXACT)
    for xt, sign in (((1.0, 0.0, 0.0), 1.0), ((0.0, 0.0, 1.0), -1.0)):
        x = NeutrosophicTriplet(*xt)
        pt = (xt,)
        _equality(corners, certainty(x), 1.0, pt, "certainty = 1")
        _equality(corners, score(x), sign, pt, f"score = {sign:+g}")
        _equality(corners, uncertainty(x), 0.0, pt, "uncertainty = 0")
        _equality(corners, neutrosophic_entropy(x).normalized, 0.0, pt, "normalized entropy = 0")
    balanced = CheckReport("boundary_mu_equals_nu", tolerance=TOL_EXACT)
    for x in points:
        if x.mu != x.nu:
            continue
        pt = (x.astuple(),)
        _equality(balanced, certainty(x), 0.0, pt, "certainty = 0")
        _equality(balanced, score(x), 0.0, pt, "score = 0")
        _equality(balanced, uncertainty(x), 1.0, pt, "uncertainty = 1")
        _equality(balanced, neutrosophic_entropy(x).normalized, 1.0, pt, "normalized entropy = 1")
    return [corners, balanced]


def _score_chain_check() -> CheckReport:
    report = CheckReport("score_ordering_chain", tolerance=TOL_EXACT)
    values = []
    for xt, expected in SCORE_CHAIN:
        r = score(NeutrosophicTriplet(*xt))
        values.append(r)
        _equality(report, r, expected, (xt,), f"score = {expected:g}")
    for (a, _), (b, _), rel, ra, rb in zip(
        SCORE_CHAIN, SCORE_CHAIN[1:], _SCORE_CHAIN_RELATIONS, values, values[1:]
    ):
        if rel == ">":
            report.record(0.0 if ra > rb else 1.0 + (rb - ra), (a, b), "score(a) > score(b)", (ra, rb))
        else:
            report.record(abs(ra - rb), (a, b), "score(a) = score(b)", (ra, rb))
    return report


def _sampled_pair_checks(grid: GridSpec, points: list[NeutrosophicTriplet]) -> list[CheckReport]:
    oracle = CheckReport("distance_oracle_equivalence", tolerance=TOL_ALGEBRA)
    denom = CheckReport("distance_denominator_identity", tolerance=TOL_ALGEBRA)
    anchors = CheckReport("distance_anchor_path_lengths", tolerance=TOL_ALGEBRA)
    sym = CheckReport("distance_symmetry", tolerance=0.0)
    bound = CheckReport("distance_range", tolerance=0.0)
    sim = CheckReport("similarity_is_one_minus_distance", tolerance=TOL_EXACT)
    for i, j in _pair_stream(grid, len(points)):
        p1, p2 = points[i], points[j]
        pts = (p1.astuple(), p2.astuple())
        d = distance(p1, p2)
        _equality(oracle, d, distance_oracle(p1, p2), pts, "distance = distance_oracle")
        d1, d2 = p1.mu + p1.nu - 1.0, p2.mu + p2.nu - 1.0
        via_c = 2.0 - d1 - d2 + p1.omega + p2.omega
        via_u = 2.0 + d1 + d2 + p1.omega + p2.omega
        _equality(
            denom,
            max(via_c, via_u),
            2.0 + abs(d1 + d2) + p1.omega + p2.omega,
            pts,
            "max(detour via C, detour via U) = 2 + |delta1 + delta2| + omega1 + omega2",
        )
        expanded = anchor_path_lengths(p1, p2)
        direct = (
            l1_distance(p1, CONTRADICTION_ANCHOR),
            l1_distance(CONTRADICTION_ANCHOR, p2),
            l1_distance(p1, UNCERTAINTY_ANCHOR),
            l1_distance(UNCERTAINTY_ANCHOR, p2),
        )
        anchors.record(
            max(abs(u - v) for u, v in zip(expanded, direct)), pts, "expanded anchor distances = L1", expanded
        )
        d21 = distance(p2, p1)
        sym.record(abs(d - d21), pts, "distance(p1, p2) = distance(p2, p1)", (d, d21))
        bound.record(max(0.0, -d, d - 1.0), pts, "0 <= distance <= 1", (d,))
        _equality(sim, similarity(p1, p2), 1.0 - d, pts, "similarity = 1 - distance")
    return [oracle, denom, anchors, sym, bound, sim]


def _triangle_probe(grid: GridSpec, points: list[NeutrosophicTriplet]) -> CheckReport:
    report = CheckReport("triangle_inequality_probe", tolerance=TOL_ALGEBRA, mandatory=False)
    rng = LCG(grid.seed ^ 0x9E3779B97F4A7C15)
    n = len(points)
    for _ in range(grid.pair_samples):
        a, b, c = points[rng.below(n)], points[rng.below(n)], points[rng.below(n)]
        lhs = distance(a, c)
        rhs = distance(a, b) + distance(b, c)
        report.record(
            max(0.0, lhs - rhs),
            (a.astuple(), b.astuple(), c.astuple()),
            "distance(a, c) <= distance(a, b) + distance(b, c)",
            (lhs, rhs),
        )
    report.notes["violation_rate"] = report.failure_count / max(report.cases_run, 1)
    return report


def _escort_entropy_checks(points: list[NeutrosophicTriplet]) -> list[CheckReport]:
    esum = CheckReport("escort_sum_is_one", tolerance=TOL_EXACT)
    escore = CheckReport("escort_preserves_score", tolerance=TOL_EXACT)
    eclosed = CheckReport("escort_closed_form", tolerance=TOL_ALGEBRA)
    forms = CheckReport("entropy_four_forms", tolerance=TOL_ALGEBRA)
    canon = CheckReport("entropy_canonical_matches_closed_form", tolerance=TOL_ALGEBRA)
    comp = CheckReport("entropy_complement_invariance", tolerance=TOL_EXACT)
    erange = CheckReport("entropy_range", tolerance=0.0)
    extremes = CheckReport("entropy_extremes", tolerance=0.0)
    norm = CheckReport("entropy_normalization", tolerance=TOL_EXACT)
    for x in points:
        pt = (x.astuple(),)
        e = escort(x)
        r = score(x)
        _equality(esum, e.escort_mu + e.escort_nu, 1.0, pt, "escort_mu + escort_nu = 1")
        _equality(escore, e.escort_mu - e.escort_nu, r, pt, "escort_mu - escort_nu = score")
        cm, cn = escort_closed_form(x)
        eclosed.record(
            max(abs(cm - e.escort_mu), abs(cn - e.escort_nu)),
            pt,
            "(1 +- r) / 2 = (mu|nu + pi + omega/2) / (1 + |delta| + omega)",
            (e.escort_mu, cm, e.escort_nu, cn),
        )
        f = entropy_forms(x)
        vals = list(f.values())
        forms.record(max(vals) - min(vals), pt, "closed = score = abs_score = certainty forms", tuple(vals))
        h = neutrosophic_entropy(x)
        _equality(canon, h.nats, f["closed"], pt, "escort-then-entropy = closed form")
        _equality(comp, neutrosophic_entropy(complement(x)).nats, h.nats, pt, "E(complement(x)) = E(x)")
        erange.record(max(0.0, -h.normalized, h.normalized - 1.0), pt, "0 <= normalized <= 1", (h.normalized,))
        _equality(norm, h.normalized, h.nats / LN2, pt, "normalized = nats / ln 2")
        is_one = h.normalized == 1.0
        is_zero = h.normalized == 0.0
        crisp = x.astuple() in ((1.0, 0.0, 0.0), (0.0, 0.0, 1.0))
        extremes.record(
            0.0 if (is_one == (x.mu == x.nu)) and (is_zero == crisp) else 1.0,
            pt,
            "normalized = 1 iff mu = nu; = 0 iff x is (1,0,0) or (0,0,1)",
            (h.normalized,),
        )
    return [esum, escore, eclosed, forms, canon, comp, erange, extremes, norm]


def _specialization_checks(grid: GridSpec) -> list[CheckReport]:
    n = grid.divisions
    pairs: dict[PairKind, list[BifuzzyPair]] = {k: [] for k in PairKind}
    for i, j in product(range(n + 1), repeat=2):
        mu, nu = i / n, j / n
        pairs[PairKind.BIFUZZY].append(BifuzzyPair(mu, nu, PairKind.BIFUZZY))
        if i + j <= n:
            pairs[PairKind.INTUITIONISTIC].append(BifuzzyPair(mu, nu, PairKind.INTUITIONISTIC))
        if i + j >= n:
            pairs[PairKind.PARACONSISTENT].append(BifuzzyPair(mu, nu, PairKind.PARACONSISTENT))

    single = CheckReport("specialization_pair_measures", tolerance=TOL_EXACT)
    esc = CheckReport("specialization_pair_escort", tolerance=TOL_EXACT)
    ent = CheckReport("specialization_pair_entropy", tolerance=TOL_EXACT)
    dist = CheckReport("specialization_pair_distance", tolerance=TOL_EXACT)
    general: dict[PairMeasure, Callable] = {
        PairMeasure.CERTAINTY: certainty,
        PairMeasure.SCORE: score,
        PairMeasure.UNCERTAINTY: uncertainty,
    }
    for kind, plist in pairs.items():
        for p in plist:
            x = p.as_triplet()
            pt = ((p.mu, p.nu),)
            for which, fn in general.items():
                _equality(single, pair_measures(p, which), fn(x), pt, f"{kind.value} {which.value}")
            pe, te = pair_escort(p), escort(x)
            esc.record(
                max(abs(pe.escort_mu - te.escort_mu), abs(pe.escort_nu - te.escort_nu)),
                pt,
                f"{kind.value} escort",
                (pe.escort_mu, te.escort_mu),
            )
            pv, tv = pair_entropy(p), neutrosophic_entropy(x)
            ent.record(
                max(abs(pv.nats - tv.nats), abs(pv.normalized - tv.normalized)),
                pt,
                f"{kind.value} entropy",
                (pv.normalized, tv.normalized),
            )
        for p1, p2 in product(plist, repeat=2):
            pt = ((p1.mu, p1.nu), (p2.mu, p2.nu))
            d = distance(p1.as_triplet(), p2.as_triplet())
            _equality(dist, pair_distance(p1, p2, PairDistance.DISTANCE), d, pt, f"{kind.value} distance")
            _equality(
                dist, pair_distance(p1, p2, PairDistance.SIMILARITY), 1.0 - d, pt, f"{kind.value} similarity"
            )
    return [single, esc, ent, dist]


def _lattice_arrays(grid: GridSpec):
    """Integer secondary coordinates and measure values on the lattice."""
    n = grid.divisions
    idx = np.array(grid.indices(), dtype=np.int64)
    i_mu, i_om, i_nu = idx.T
    pts = [NeutrosophicTriplet(i / n, j / n, k / n) for i, j, k in idx.tolist()]
    tau = i_mu - i_nu
    delta = i_mu + i_nu - n
    values = {
        "certainty": np.array([certainty(p) for p in pts]),
        "score": np.array([score(p) for p in pts]),
        "uncertainty": np.array([uncertainty(p) for p in pts]),
        "entropy": np.array([neutrosophic_entropy(p).normalized for p in pts]),
    }
    return pts, tau, np.abs(delta), i_om, values


def _monotone_check(
    name: str,
    pts: list[NeutrosophicTriplet],
    cond: Callable[[slice], np.ndarray],
    lhs: np.ndarray,
    rhs: np.ndarray,
    relation: str,
    block: int = 256,
) -> CheckReport:
    """Assert ``lhs[i] <= rhs[j]`` for every ordered pair with ``cond[i, j]``."""
    report = CheckReport(name, tolerance=TOL_MONOTONE)
    n = len(pts)
    for start in range(0, n, block):
        rows = slice(start, min(start + block, n))
        mask = cond(rows)
        gap = lhs[rows, None] - rhs[None, :]
        active = np.where(mask, gap, -np.inf)
        count = int(mask.sum())
        report.cases_run += count
        if count:
            report.max_violation = max(report.max_violation, float(active.max()))
        bad_i, bad_j = np.nonzero(mask & (gap > report.tolerance))
        report.failure_count += len(bad_i)
        for a, b in zip(bad_i[:MAX_RECORDED_FAILURES], bad_j[:MAX_RECORDED_FAILURES]):
            a += start
            report.failures.append(
                Failure((pts[a].astuple(), pts[b].astuple()), relation, (float(lhs[a]), float(rhs[b])))
            )
    report.max_violation = max(report.max_violation, 0.0)
    return report


def _monotonicity_checks(grid: GridSpec) -> list[CheckReport]:
    pts, tau, adelta, om, v = _lattice_arrays(grid)
    atau = np.abs(tau)

    def col(a, rows):
        return a[rows, None]

    def decreasing_uncertainty(rows):
        # x1 <= x2 when |tau1| >= |tau2|, |delta1| <= |delta2|, omega1 <= omega2
        return (col(atau, rows) >= atau) & (col(adelta, rows) <= adelta) & (col(om, rows) <= om)

    def increasing_certainty(rows):
        return (col(atau, rows) <= atau) & (col(adelta, rows) >= adelta) & (col(om, rows) >= om)

    def score_nonneg(rows):
        t1 = col(tau, rows)
        return (0 <= t1) & (t1 <= tau) & (col(adelta, rows) >= adelta) & (col(om, rows) >= om)

    def score_nonpos(rows):
        t1 = col(tau, rows)
        return (t1 <= tau) & (tau <= 0) & (col(adelta, rows) <= adelta) & (col(om, rows) <= om)

    return [
        _monotone_check(
            "monotonicity_certainty", pts, increasing_certainty, v["certainty"], v["certainty"],
            "certainty(x1) <= certainty(x2)",
        ),
        _monotone_check(
            "monotonicity_score_nonneg_tau", pts, score_nonneg, v["score"], v["score"],
            "score(x1) <= score(x2)",
        ),
        _monotone_check(
            "monotonicity_score_nonpos_tau", pts, score_nonpos, v["score"], v["score"],
            "score(x1) <= score(x2)",
        ),
        _monotone_check(
            "monotonicity_uncertainty", pts, decreasing_uncertainty, v["uncertainty"], v["uncertainty"],
            "uncertainty(x1) <= uncertainty(x2)",
        ),
        _monotone_check(
            "monotonicity_entropy", pts, decreasing_uncertainty, v["entropy"], v["entropy"],
            "entropy(x1) <= entropy(x2)",
        ),
    ]


def _derivative_checks(points: list[NeutrosophicTriplet], h: float) -> list[CheckReport]:
    slack = 10.0 * h * h
    rel_tol = max(1e-6, 100.0 * h * h)
    chain = CheckReport("derivative_chain_rule", tolerance=TOL_ALGEBRA)
    signs = CheckReport("derivative_signs", tolerance=slack)
    agree = CheckReport("derivative_fd_agreement", tolerance=rel_tol)
    schemes = {"central": 0, "forward": 0, "backward": 0, "skipped": 0}
    kink = 0
    for x in points:
        pt = (x.astuple(),)
        s = to_secondary(x)
        coords = (abs(s.tau), abs(s.delta), s.omega)
        if coords[0] < 1.0 + coords[1] + coords[2]:
            direct = entropy_gradient(*coords)
            composed = entropy_gradient_chain(*coords)
            chain.record(
                max(abs(a - b) for a, b in zip(direct, composed)), pt, "chain rule = direct partials", direct
            )
        try:
            probes = _fd_probes(x, h)
        except DegenerateInput:
            kink += 1
            continue
        for p in probes:
            schemes[p.scheme] += 1
            if p.scheme == "skipped":
                signs.skipped += 1
                continue
            signs.record(_sign_violation(p.axis, p.estimate), pt, f"{p.scheme} sign of dE/d{p.axis}", (p.estimate,))
            if p.scheme == "central" and abs(p.analytic) > 1e-3:
                agree.record(
                    _relative_error(p.estimate, p.analytic),
                    pt,
                    f"central dE/d{p.axis} ~ analytic",
                    (p.estimate, p.analytic),
                )
    signs.notes.update({f"{k}_probes": v for k, v in schemes.items()})
    signs.notes["tau_zero_points_skipped"] = kink
    signs.notes["fd_step"] = h
    agree.notes["fd_step"] = h
    return [chain, signs, agree]


def run_property_suite(grid: GridSpec | None = None, fd_step: float = 1e-4) -> list[CheckReport]:
    """Run every check over ``grid``; reports come back sorted by name."""
    grid = GridSpec() if grid is None else grid
    if not (0.0 < fd_step <= 0.01):
        raise ValueError(f"finite-difference step must lie in (0, 0.01], got {fd_step!r}")
    points = grid.points()
    reports: list[CheckReport] = []
    reports += _core_checks(points)
    reports += _pointwise_measure_checks(points)
    reports += _boundary_checks(points)
    reports.append(_score_chain_check())
    reports += _sampled_pair_checks(grid, points)
    reports.append(_triangle_probe(grid, points))
    reports += _escort_entropy_checks(points)
    reports += _specialization_checks(grid)
    reports += _monotonicity_checks(grid)
    reports += _derivative_checks(points, fd_step)
    return sorted((r.finish() for r in reports), key=lambda r: r.check_name)


def suite_passed(reports: Sequence[CheckReport]) -> bool:
    return all(r.passed for r in reports if r.mandatory)
