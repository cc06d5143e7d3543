from math import isqrt

import pytest

from jacobsthal.errors import NoRepresentation, WrongResidueClass
from jacobsthal.modarith import legendre_symbol
from jacobsthal.primes import sieve_upto
from jacobsthal.quadforms import (
    CubicRep,
    QuadRep,
    brute_force_repr,
    cornacchia,
    cubic_rep,
    epsilon_classical,
    epsilon_sqrtm2,
)


class TestCornacchia:
    @pytest.mark.parametrize(
        "p,d,a,b",
        [(3, 2, 1, 1), (17, 2, 3, 2), (5, 1, 1, 2), (41, 2, 3, 4), (73, 2, 1, 6)],
    )
    def test_reference_values(self, p, d, a, b):
        rep = cornacchia(p, d)
        assert (rep.a, rep.b) == (a, b)

    def test_no_representation(self):
        with pytest.raises(NoRepresentation):
            cornacchia(7, 2)  # 7 == 7 mod 8
        with pytest.raises(NoRepresentation):
            cornacchia(11, 1)  # 11 == 3 mod 4

    def test_rejects_other_d(self):
        with pytest.raises(ValueError):
            cornacchia(17, 3)

    def test_matches_oracle(self):
        for p in sieve_upto(3000):
            if p < 3:
                continue
            for d in (1, 2):
                if legendre_symbol(-d, p) == 1:
                    assert cornacchia(p, d) == brute_force_repr(p, d)
                else:
                    with pytest.raises(NoRepresentation):
                        brute_force_repr(p, d)

    def test_normalization(self):
        for p in sieve_upto(2000):
            if p % 4 == 1:
                rep = cornacchia(p, 1)
                assert rep.a % 2 == 1 and rep.b % 2 == 0
            if p % 8 in (1, 3):
                rep = cornacchia(p, 2)
                assert rep.a % 2 == 1  # forced by parity of p = a^2 + 2b^2
                assert (rep.b % 2 == 0) == (p % 8 == 1)


class TestQuadRepInvariants:
    def test_valid(self):
        QuadRep(3, 2, 2, 17)

    def test_form_value_checked(self):
        with pytest.raises(AssertionError):
            QuadRep(3, 3, 2, 17)

    def test_parity_checked_for_d1(self):
        with pytest.raises(AssertionError):
            QuadRep(2, 1, 1, 5)


class TestCubicRep:
    def test_reference_values(self):
        assert cubic_rep(7) == CubicRep(1, 4, 7)
        assert cubic_rep(13) == CubicRep(2, 5, 13)

    def test_wrong_class(self):
        with pytest.raises(WrongResidueClass):
            cubic_rep(5)

    def test_form_and_canonicality(self):
        for p in sieve_upto(2000):
            if p % 6 != 1:
                continue
            rep = cubic_rep(p)
            assert rep.a > 0 and rep.b > 0
            assert rep.a * rep.a + rep.a * rep.b + rep.b * rep.b == 3 * p
            # no smaller positive a admits an integer solution
            for a in range(1, rep.a):
                disc = 12 * p - 3 * a * a
                s = isqrt(disc)
                assert s * s != disc or s <= a


class TestEpsilonClassical:
    def test_reference_p5(self):
        report = epsilon_classical(5)
        assert report.predicted_trace == -2
        assert report.observed_trace == -2
        assert report.consistent

    @pytest.mark.parametrize("p", [13, 17, 29, 37, 41])
    def test_consistent(self, p):
        assert epsilon_classical(p).consistent

    def test_wrong_class(self):
        with pytest.raises(WrongResidueClass):
            epsilon_classical(7)

    def test_hasse_bound_in_reports(self):
        for p in sieve_upto(1000):
            if p % 4 == 1:
                r = epsilon_classical(p)
                assert r.observed_trace**2 <= 4 * p


class TestEpsilonSqrtm2:
    def test_reference_p3(self):
        report = epsilon_sqrtm2(3)
        assert report.predicted_trace == -2
        assert report.observed_trace == -2  # the curve has 6 points over F_3
        assert report.consistent

    @pytest.mark.parametrize("p", [11, 17, 19, 41, 43, 73, 89, 97])
    def test_consistent(self, p):
        assert epsilon_sqrtm2(p).consistent

    def test_wrong_class(self):
        with pytest.raises(WrongResidueClass):
            epsilon_sqrtm2(5)
        with pytest.raises(WrongResidueClass):
            epsilon_sqrtm2(7)

    def test_consistent_over_range(self):
        for p in sieve_upto(2000):
            if p % 8 in (1, 3):
                assert epsilon_sqrtm2(p).consistent
