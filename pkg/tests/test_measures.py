import itertools

import pytest
from hypothesis import given

from neutrosophic import (
    BifuzzyPair,
    KindMismatch,
    NeutrosophicTriplet as T,
    PairKind,
    certainty,
    complement,
    distance,
    l1_distance,
    pair_distance,
    pair_measures,
    score,
    similarity,
    uncertainty,
)
from neutrosophic.measures import CONTRADICTION_ANCHOR, UNCERTAINTY_ANCHOR

from conftest import triplets


def detour_distance(p1, p2):
    """L1 gap over the longest detour through (1,0,1) or (0,0,0), by brute force."""
    detours = [l1_distance(p1, a) + l1_distance(a, p2) for a in (T(1, 0, 1), T(0, 0, 0))]
    return l1_distance(p1, p2) / max(detours)


def test_anchors():
    assert CONTRADICTION_ANCHOR.astuple() == (1, 0, 1)
    assert UNCERTAINTY_ANCHOR.astuple() == (0, 0, 0)


class TestL1:
    def test_values(self):
        assert l1_distance(T(1, 0, 0), T(0, 0, 1)) == 2
        assert l1_distance(T(0.3, 0.4, 0.5), T(0.3, 0.4, 0.5)) == 0
        assert l1_distance(T(1, 1, 1), T(0, 0, 0)) == 3


class TestDistance:
    @pytest.mark.parametrize(
        "p1, p2, expected",
        [
            ((1, 0, 0), (0, 0, 1), 1.0),
            ((0.2, 0.7, 0.9), (0.2, 0.7, 0.9), 0.0),
            ((1, 1, 0), (0, 1, 1), 0.5),
        ],
    )
    def test_examples(self, p1, p2, expected):
        assert distance(T(*p1), T(*p2)) == pytest.approx(expected, abs=1e-15)
        assert detour_distance(T(*p1), T(*p2)) == pytest.approx(expected, abs=1e-15)
        assert similarity(T(*p1), T(*p2)) == pytest.approx(1 - expected, abs=1e-15)

    def test_self_similarity(self):
        p = T(0.13, 0.77, 0.42)
        assert similarity(p, p) == 1.0

    @given(triplets, triplets)
    def test_matches_detour_definition(self, p1, p2):
        assert distance(p1, p2) == pytest.approx(detour_distance(p1, p2), abs=1e-12)

    @given(triplets, triplets)
    def test_range_and_symmetry(self, p1, p2):
        d = distance(p1, p2)
        assert 0.0 <= d <= 1.0
        assert d == distance(p2, p1)

    @given(triplets)
    def test_zero_on_self(self, p):
        assert distance(p, p) == 0.0


class TestCertaintyScoreUncertainty:
    def test_certainty_corners(self):
        assert certainty(T(1, 0, 0)) == 1.0
        assert certainty(T(0, 0, 1)) == 1.0

    def test_certainty_balanced(self):
        assert certainty(T(0.4, 0.7, 0.4)) == 0.0

    def test_certainty_example(self):
        # 0.6 / (1 + 0.2 + 0.2)
        assert certainty(T(0.7, 0.2, 0.1)) == pytest.approx(3 / 7, abs=1e-15)

    def test_score_corners(self):
        assert score(T(1, 0, 0)) == 1.0
        assert score(T(0, 0, 1)) == -1.0
        assert score(T(0.3, 0.6, 0.3)) == 0.0
        assert score(T(1, 1, 0)) == 0.5
        assert score(T(0, 1, 1)) == -0.5

    def test_score_chain(self):
        chain = [(1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 0, 1), (0, 1, 0), (0, 0, 0), (0, 1, 1), (0, 0, 1)]
        r = [score(T(*c)) for c in chain]
        assert r == [1.0, 0.5, 0.0, 0.0, 0.0, 0.0, -0.5, -1.0]
        assert r[0] > r[1] > r[2] == r[3] == r[4] == r[5] > r[6] > r[7]

    def test_uncertainty(self):
        assert uncertainty(T(1, 0, 0)) == 0.0
        assert uncertainty(T(0, 0, 1)) == 0.0
        assert uncertainty(T(0.2, 0.5, 0.2)) == 1.0
        assert uncertainty(T(0.7, 0.2, 0.1)) == pytest.approx(4 / 7, abs=1e-15)

    @given(triplets)
    def test_identities(self, x):
        xc = complement(x)
        assert abs(certainty(x) - distance(x, xc)) <= 1e-15
        assert score(xc) == -score(x)
        assert abs(certainty(x) - abs(score(x))) <= 1e-15
        assert abs(uncertainty(x) - (1 - certainty(x))) <= 1e-15
        assert certainty(x) == certainty(xc)

    @given(triplets)
    def test_ranges(self, x):
        assert 0.0 <= certainty(x) <= 1.0
        assert -1.0 <= score(x) <= 1.0


def _grid_pairs(step=5):
    vals = [i / step for i in range(step + 1)]
    return list(itertools.product(vals, vals))


class TestPairs:
    def test_intuitionistic_score(self):
        p = BifuzzyPair(0.6, 0.2, PairKind.INTUITIONISTIC)
        assert pair_measures(p, "score") == pytest.approx(1 / 3, abs=1e-15)

    def test_paraconsistent_certainty(self):
        p = BifuzzyPair(0.9, 0.4, PairKind.PARACONSISTENT)
        assert pair_measures(p, "certainty") == pytest.approx(0.5 / 1.3, abs=1e-15)

    def test_bifuzzy_uncertainty(self):
        assert pair_measures(BifuzzyPair(0.5, 0.5), "uncertainty") == 1.0

    def test_pair_distance_examples(self):
        I = PairKind.INTUITIONISTIC
        assert pair_distance(BifuzzyPair(1, 0, I), BifuzzyPair(0, 1, I), "distance") == 1.0
        assert pair_distance(BifuzzyPair(0.3, 0.3), BifuzzyPair(0.3, 0.3), "distance") == 0.0
        P = PairKind.PARACONSISTENT
        assert pair_distance(BifuzzyPair(1, 1, P), BifuzzyPair(1, 1, P), "similarity") == 1.0

    def test_mixed_kinds_rejected(self):
        with pytest.raises(KindMismatch):
            pair_distance(
                BifuzzyPair(0.2, 0.2, PairKind.INTUITIONISTIC), BifuzzyPair(0.9, 0.9), "distance"
            )

    @pytest.mark.parametrize("kind", list(PairKind))
    def test_specialization_matches_general(self, kind):
        pairs = []
        for mu, nu in _grid_pairs():
            try:
                pairs.append(BifuzzyPair(mu, nu, kind))
            except KindMismatch:
                continue
        general = {"certainty": certainty, "score": score, "uncertainty": uncertainty}
        for p in pairs:
            for name, fn in general.items():
                assert abs(pair_measures(p, name) - fn(p.as_triplet())) <= 1e-15
        for p1, p2 in itertools.product(pairs, repeat=2):
            d = distance(p1.as_triplet(), p2.as_triplet())
            assert abs(pair_distance(p1, p2, "distance") - d) <= 1e-15
            assert abs(pair_distance(p1, p2, "similarity") - (1 - d)) <= 1e-15
