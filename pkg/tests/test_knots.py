"""Knot sequence validation and family generators."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import splinequad as sq
from conftest import random_stretched


class TestValidate:
    def test_uniform_is_valid(self):
        ks = sq.validate([0.0, 0.25, 0.5, 0.75, 1.0], 0.0, 1.0)
        assert ks.n == 4
        assert ks.a == 0.0 and ks.b == 1.0

    def test_rejects_non_increasing(self):
        with pytest.raises(sq.NotIncreasing):
            sq.validate([0.0, 0.5, 0.5, 1.0], 0.0, 1.0)

    def test_rejects_asymmetric(self):
        with pytest.raises(sq.NotSymmetric):
            sq.validate([0.0, 0.1, 0.5, 1.0], 0.0, 1.0)

    def test_rejects_shrinking_toward_middle(self):
        # Intervals 0.4, 0.1, 0.1, 0.4: symmetric but stretched the
        # wrong way round.
        with pytest.raises(sq.NotStretched):
            sq.validate([0.0, 0.4, 0.5, 0.6, 1.0], 0.0, 1.0)

    def test_error_names_offending_index(self):
        with pytest.raises(sq.NotStretched, match=r"\b0\b"):
            sq.validate([0.0, 0.4, 0.5, 0.6, 1.0], 0.0, 1.0)

    def test_endpoint_mismatch(self):
        with pytest.raises(sq.KnotError):
            sq.validate([0.0, 0.5, 1.0], 0.0, 2.0)


class TestExtendedKnots:
    def test_phantom_knots_reflect_end_intervals(self):
        ks = sq.gen_uniform(4, 0.0, 1.0)
        assert ks.knot(-1) == pytest.approx(-0.25)
        assert ks.knot(5) == pytest.approx(1.25)

    def test_interval_lengths(self):
        ks = sq.validate([0.0, 0.2, 0.5, 0.8, 1.0], 0.0, 1.0)
        assert ks.h(1) == pytest.approx(0.2)
        assert ks.h(2) == pytest.approx(0.3)
        # phantom intervals mirror the boundary ones
        assert ks.h(0) == pytest.approx(ks.h(1))
        assert ks.h(ks.n + 1) == pytest.approx(ks.h(ks.n))


class TestFamilies:
    def test_uniform(self):
        ks = sq.gen_uniform(4, 0.0, 1.0)
        assert list(ks.knots) == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_geometric_q2_N5(self):
        # q=2 with five internal knots: interval lengths 1,2,4,4,2,1
        # in units of 1/14.
        ks = sq.gen_geometric(5, 2.0, 0.0, 1.0)
        expect = [k / 14.0 for k in (0, 1, 3, 7, 11, 13, 14)]
        assert np.allclose(ks.knots, expect, atol=1e-15)

    def test_geometric_q1_is_uniform(self):
        ks = sq.gen_geometric(4, 1.0, 0.0, 1.0)
        assert np.allclose(ks.knots, sq.gen_uniform(5, 0.0, 1.0).knots)

    def test_geometric_rejects_q_below_one(self):
        with pytest.raises(sq.InvalidRatio):
            sq.gen_geometric(4, 0.5, 0.0, 1.0)

    def test_chebyshev_first_internal_knot(self):
        # (1 - cos(pi/10)) / 2 mapped to [0, 1]
        ks = sq.gen_chebyshev(5, 0.0, 1.0)
        assert ks.knots[1] == pytest.approx(0.024471741852423234, abs=1e-15)
        assert ks.n == 6

    def test_legendre_matches_numpy(self):
        for N in (3, 5, 8, 12):
            mine = sq.legendre_roots(N)
            theirs = np.polynomial.legendre.legroots([0.0] * N + [1.0])
            assert np.allclose(mine, theirs, atol=1e-13)

    def test_families_are_valid_sequences(self):
        for N in range(1, 12):
            for ks in (sq.gen_chebyshev(N, -2.0, 3.0),
                       sq.gen_legendre(N, -2.0, 3.0),
                       sq.gen_geometric(N, 1.7, -2.0, 3.0)):
                sq.validate(ks.knots, -2.0, 3.0)


class TestSerialization:
    def test_json_round_trip(self):
        ks = sq.gen_chebyshev(5, 0.0, 1.0)
        back = sq.KnotSequence.from_json(ks.to_json())
        assert back == ks

    def test_json_fields(self):
        obj = json.loads(sq.gen_uniform(3, 0.0, 1.0).to_json())
        assert set(obj) >= {"a", "b", "knots"}


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=1, max_value=30), seed=st.integers(0, 2**31))
def test_random_stretched_generator_produces_valid_sequences(n, seed):
    rng = np.random.default_rng(seed)
    ks = random_stretched(rng, n)
    assert ks.n == n
    for k in range(ks.n + 1):
        assert math.isclose(ks.knot(k) - ks.a, ks.b - ks.knot(ks.n - k),
                            rel_tol=0.0, abs_tol=1e-12)
