import math

import pytest
from hypothesis import given

from neutrosophic import (
    BifuzzyPair,
    NeutrosophicTriplet as T,
    OutOfRange,
    PairKind,
    complement,
    escort,
    measure_report,
    neutrosophic_entropy,
    pair_entropy,
    pair_escort,
    score,
    shannon_fuzzy_entropy,
    uncertainty,
)

from conftest import triplets

# mpmath, 30 digits
H_5_7 = 0.598269588585257234842744042151
H_5_7_NORM = 0.863120568566631001820312581882
H_PARA_0904_NORM = 0.890491640219491293768558731867


class TestEscort:
    def test_full_truth(self):
        e = escort(T(1, 0, 0))
        assert (e.escort_mu, e.escort_nu) == (1.0, 0.0)

    def test_center(self):
        e = escort(T(0.5, 0.5, 0.5))
        assert (e.escort_mu, e.escort_nu) == (0.5, 0.5)

    def test_example(self):
        e = escort(T(0.7, 0.2, 0.1))
        assert e.escort_mu == pytest.approx(5 / 7, abs=1e-15)
        assert e.escort_nu == pytest.approx(2 / 7, abs=1e-15)

    @given(triplets)
    def test_preserves_score(self, x):
        e = escort(x)
        assert abs(e.escort_mu + e.escort_nu - 1) <= 1e-15
        assert abs(e.escort_mu - e.escort_nu - score(x)) <= 1e-15

    @given(triplets)
    def test_closed_form(self, x):
        delta = x.mu + x.nu - 1
        pi = max(-delta, 0.0)
        den = 1 + abs(delta) + x.omega
        e = escort(x)
        assert e.escort_mu == pytest.approx((x.mu + pi + x.omega / 2) / den, abs=1e-12)
        assert e.escort_nu == pytest.approx((x.nu + pi + x.omega / 2) / den, abs=1e-12)


class TestPairEscort:
    def test_intuitionistic(self):
        e = pair_escort(BifuzzyPair(0.6, 0.2, PairKind.INTUITIONISTIC))
        assert e.escort_mu == pytest.approx(2 / 3, abs=1e-15)
        assert e.escort_nu == pytest.approx(1 / 3, abs=1e-15)

    def test_paraconsistent(self):
        e = pair_escort(BifuzzyPair(0.9, 0.4, PairKind.PARACONSISTENT))
        assert e.escort_mu == pytest.approx(0.9 / 1.3, abs=1e-15)
        assert e.escort_nu == pytest.approx(0.4 / 1.3, abs=1e-15)

    def test_bifuzzy(self):
        e = pair_escort(BifuzzyPair(0.5, 0.5))
        assert (e.escort_mu, e.escort_nu) == (0.5, 0.5)


class TestShannon:
    def test_max(self):
        assert shannon_fuzzy_entropy(0.5) == math.log(2)

    def test_degenerate(self):
        assert shannon_fuzzy_entropy(0.0) == 0.0
        assert shannon_fuzzy_entropy(1.0) == 0.0

    def test_value(self):
        assert shannon_fuzzy_entropy(5 / 7) == pytest.approx(H_5_7, abs=1e-15)

    def test_range(self):
        with pytest.raises(OutOfRange):
            shannon_fuzzy_entropy(1.5)


class TestNeutrosophicEntropy:
    def test_crisp(self):
        assert neutrosophic_entropy(T(1, 0, 0)).normalized == 0.0
        assert neutrosophic_entropy(T(0, 0, 1)).normalized == 0.0

    def test_balanced(self):
        assert neutrosophic_entropy(T(0.4, 0.8, 0.4)).normalized == 1.0

    def test_example(self):
        h = neutrosophic_entropy(T(0.7, 0.2, 0.1))
        assert h.nats == pytest.approx(H_5_7, abs=1e-12)
        assert h.normalized == pytest.approx(H_5_7_NORM, abs=1e-12)

    @given(triplets)
    def test_properties(self, x):
        h = neutrosophic_entropy(x)
        assert 0.0 <= h.normalized <= 1.0
        assert abs(h.normalized - h.nats / math.log(2)) <= 1e-15
        assert abs(neutrosophic_entropy(complement(x)).nats - h.nats) <= 1e-15

    def test_differs_from_uncertainty(self):
        x = T(0.7, 0.2, 0.1)
        assert neutrosophic_entropy(x).normalized != pytest.approx(uncertainty(x), abs=1e-3)


class TestPairEntropy:
    def test_balanced(self):
        assert pair_entropy(BifuzzyPair(0.5, 0.5, PairKind.INTUITIONISTIC)).normalized == 1.0

    def test_crisp(self):
        assert pair_entropy(BifuzzyPair(1, 0, PairKind.INTUITIONISTIC)).normalized == 0.0

    def test_paraconsistent(self):
        h = pair_entropy(BifuzzyPair(0.9, 0.4, PairKind.PARACONSISTENT))
        assert h.normalized == pytest.approx(H_PARA_0904_NORM, abs=1e-12)
        assert abs(h.nats - neutrosophic_entropy(T(0.9, 0, 0.4)).nats) <= 1e-15


def test_measure_report():
    rep = measure_report(T(0.7, 0.2, 0.1))
    assert rep.uncertainty == 1 - rep.certainty
    assert rep.escort_mu + rep.escort_nu == pytest.approx(1, abs=1e-15)
    assert rep.entropy_normalized == pytest.approx(H_5_7_NORM, abs=1e-12)
