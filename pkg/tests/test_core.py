import pytest
from hypothesis import given

from neutrosophic import (
    BifuzzyPair,
    KindMismatch,
    NeutrosophicTriplet,
    OutOfRange,
    PairKind,
    complement,
    from_secondary,
    to_secondary,
    validate,
)

from conftest import triplets


class TestValidate:
    def test_in_range(self):
        assert validate(0.7, 0.2, 0.1).astuple() == (0.7, 0.2, 0.1)

    def test_sum_above_one_is_legal(self):
        assert validate(1.0, 0.0, 1.0).astuple() == (1.0, 0.0, 1.0)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange) as info:
            validate(1.2, 0.0, 0.0)
        assert info.value.component == "mu"
        assert info.value.value == 1.2

    @pytest.mark.parametrize(
        "args, component",
        [((0.0, -1e-300, 0.0), "omega"), ((0.0, 0.0, 1.0000000000000002), "nu"), ((float("nan"), 0, 0), "mu")],
    )
    def test_exact_bounds_no_slack(self, args, component):
        with pytest.raises(OutOfRange) as info:
            validate(*args)
        assert info.value.component == component

    def test_immutable(self):
        x = validate(0.1, 0.2, 0.3)
        with pytest.raises(AttributeError):
            x.mu = 0.5


class TestComplement:
    def test_swap(self):
        assert complement(validate(0.7, 0.2, 0.1)).astuple() == (0.1, 0.2, 0.7)

    def test_fixed_point(self):
        x = validate(0.5, 0.9, 0.5)
        assert complement(x) == x

    def test_involution(self):
        x = validate(0.3, 0.4, 0.8)
        assert complement(complement(x)) == x


class TestSecondary:
    def test_example(self):
        s = to_secondary(validate(0.7, 0.2, 0.1))
        assert s.tau == pytest.approx(0.6, abs=1e-15)
        assert s.delta == pytest.approx(-0.2, abs=1e-15)
        assert s.omega == 0.2
        assert s.pi == pytest.approx(0.2, abs=1e-15)
        assert s.kappa == 0.0

    def test_contradiction_corner(self):
        s = to_secondary(validate(1, 0, 1))
        assert (s.tau, s.delta, s.omega, s.pi, s.kappa) == (0, 1, 0, 0, 1)

    def test_incompleteness_corner(self):
        s = to_secondary(validate(0, 0, 0))
        assert (s.tau, s.delta, s.omega, s.pi, s.kappa) == (0, -1, 0, 1, 0)

    def test_from_secondary(self):
        x = from_secondary(0.6, -0.2, 0.2)
        assert x.astuple() == pytest.approx((0.7, 0.2, 0.1), abs=1e-15)

    def test_center(self):
        assert from_secondary(0, 0, 0.5).astuple() == (0.5, 0.5, 0.5)

    def test_from_secondary_out_of_range(self):
        with pytest.raises(OutOfRange):
            from_secondary(1.5, 0, 0)

    @given(triplets)
    def test_round_trip(self, x):
        s = to_secondary(x)
        back = from_secondary(s.tau, s.delta, s.omega)
        assert back.astuple() == pytest.approx(x.astuple(), abs=1e-12)

    @given(triplets)
    def test_mu_nu_pi_kappa_identity(self, x):
        s = to_secondary(x)
        assert x.mu + x.nu + s.pi - s.kappa == pytest.approx(1.0, abs=1e-12)
        assert s.pi >= 0 and s.kappa >= 0 and s.pi * s.kappa == 0
        assert s.kappa - s.pi == s.delta

    @given(triplets)
    def test_complement_flips_tau(self, x):
        s, c = to_secondary(x), to_secondary(complement(x))
        assert abs(c.tau + s.tau) <= 1e-15
        assert c.delta == s.delta and c.omega == s.omega


class TestBifuzzyPair:
    def test_kinds(self):
        assert BifuzzyPair(0.6, 0.2, PairKind.INTUITIONISTIC).pi == pytest.approx(0.2)
        assert BifuzzyPair(0.9, 0.4, "paraconsistent").kappa == pytest.approx(0.3)

    def test_boundary_legal_for_both(self):
        BifuzzyPair(0.5, 0.5, PairKind.INTUITIONISTIC)
        BifuzzyPair(0.5, 0.5, PairKind.PARACONSISTENT)

    def test_mismatch(self):
        with pytest.raises(KindMismatch):
            BifuzzyPair(0.9, 0.4, PairKind.INTUITIONISTIC)
        with pytest.raises(KindMismatch):
            BifuzzyPair(0.2, 0.3, PairKind.PARACONSISTENT)

    def test_range(self):
        with pytest.raises(OutOfRange):
            BifuzzyPair(0.2, 1.3)
