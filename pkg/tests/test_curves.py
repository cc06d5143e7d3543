import pytest

from jacobsthal.charsums import jacobsthal_sum
from jacobsthal.curves import (
    E1_COEFFS,
    E2_COEFFS,
    X1_COEFFS,
    X2_COEFFS,
    HyperellipticModel,
    classical_coeffs,
    count_points,
    kummer_character,
    local_factor_genus1,
    local_factor_genus2,
    quadratic_twist_check,
    sqrt2_minus_one_is_nonsquare,
    trace_identity_check,
)
from jacobsthal.errors import (
    BadReduction,
    HasseViolation,
    InconsistentCounts,
    ThresholdExceeded,
    WrongResidueClass,
)
from jacobsthal.primes import sieve_upto

ALL_MODELS = [E1_COEFFS, E2_COEFFS, X1_COEFFS, X2_COEFFS, classical_coeffs(1)]


def naive_count_fp(coeffs, p):
    """Oracle: count y pairs directly, then add infinity by the degree rule."""
    total = 0
    for x in range(p):
        fx = sum(c * x**k for k, c in enumerate(coeffs)) % p
        total += sum(1 for y in range(p) if y * y % p == fx)
    degree = len(coeffs) - 1
    if degree % 2 == 1:
        total += 1
    else:
        lead = coeffs[-1] % p
        if any(y * y % p == lead for y in range(1, p)):
            total += 2
    return total


def naive_count_fp2(coeffs, p, r):
    """Oracle over F_p^2 realized as pairs (u, v) = u + v*t with t^2 = r."""

    def mul(a, b):
        return ((a[0] * b[0] + r * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    def evaluate(x):
        acc = (0, 0)
        for c in reversed(coeffs):
            acc = mul(acc, x)
            acc = ((acc[0] + c) % p, acc[1])
        return acc

    elements = [(u, v) for u in range(p) for v in range(p)]
    square_count = {}
    for z in elements:
        square_count[mul(z, z)] = square_count.get(mul(z, z), 0) + 1
    total = 0
    for x in elements:
        total += square_count.get(evaluate(x), 0)
    degree = len(coeffs) - 1
    # every nonzero base-field constant is a square in F_p^2
    total += 1 if degree % 2 == 1 else 2
    return total


class TestCountPoints:
    def test_reference_values_at_3(self):
        p = 3
        assert count_points(HyperellipticModel.from_coeffs(E1_COEFFS, p), p, 1) == 6
        assert count_points(HyperellipticModel.from_coeffs(X2_COEFFS, p), p, 1) == 8
        assert count_points(HyperellipticModel.from_coeffs(X1_COEFFS, p), p, 1) == 4
        assert count_points(HyperellipticModel.from_coeffs(X2_COEFFS, p), p, 2) == 10

    def test_matches_oracle_over_fp(self):
        for p in [q for q in sieve_upto(61) if q >= 3]:
            for coeffs in ALL_MODELS:
                model = HyperellipticModel.from_coeffs(coeffs, p)
                assert count_points(model, p, 1) == naive_count_fp(coeffs, p)

    def test_matches_oracle_over_fp2(self):
        from jacobsthal.fp2 import Fp2Context

        for p in (3, 5, 7, 11):
            r = Fp2Context.for_prime(p).r
            for coeffs in ALL_MODELS:
                model = HyperellipticModel.from_coeffs(coeffs, p)
                assert count_points(model, p, 2) == naive_count_fp2(coeffs, p, r)

    def test_count_sum_consistency(self):
        for p in [q for q in sieve_upto(1000) if q >= 3]:
            for coeffs in ALL_MODELS:
                model = HyperellipticModel.from_coeffs(coeffs, p)
                s = jacobsthal_sum(coeffs, p).raw_sum
                n1 = count_points(model, p, 1)
                if model.degree % 2 == 1:
                    assert n1 == p + 1 + s
                else:
                    assert n1 == p + 2 + s  # leading coefficient 1 is a square

    def test_nonsquare_leading_coefficient_drops_infinity(self):
        # 2*x^6 + x + 1 over F_5: 2 is a nonresidue mod 5
        coeffs = (1, 1, 0, 0, 0, 0, 2)
        model = HyperellipticModel.from_coeffs(coeffs, 5)
        assert count_points(model, 5, 1) == naive_count_fp(coeffs, 5)

    def test_bad_reduction_detected(self):
        # (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1 is not squarefree
        model = HyperellipticModel.from_coeffs((1, -1, -1, 1), 7)
        with pytest.raises(BadReduction):
            count_points(model, 7, 1)

    def test_vanishing_derivative_is_bad(self):
        model = HyperellipticModel.from_coeffs((0, 0, 0, 1), 3)  # x^3 mod 3
        with pytest.raises(BadReduction):
            count_points(model, 3, 1)

    def test_fp2_enumeration_cap(self):
        model = HyperellipticModel.from_coeffs(X2_COEFFS, 2003)
        with pytest.raises(ThresholdExceeded):
            count_points(model, 2003, 2)

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            HyperellipticModel.from_coeffs((1, 2, 3), 7)  # degree 2

    def test_leading_coefficient_vanishing_rejected(self):
        with pytest.raises(BadReduction):
            HyperellipticModel.from_coeffs((1, 0, 0, 7), 7)


class TestLocalFactorGenus1:
    def test_reference_values(self):
        assert local_factor_genus1(3, 6).coeffs == (2, 3)
        assert local_factor_genus1(13, 14).coeffs == (0, 13)  # supersingular

    def test_hasse_violation(self):
        with pytest.raises(HasseViolation):
            local_factor_genus1(3, 100)

    def test_roundtrip(self):
        for p in [q for q in sieve_upto(500) if q >= 3]:
            model = HyperellipticModel.from_coeffs(E1_COEFFS, p)
            n1 = count_points(model, p, 1)
            assert local_factor_genus1(p, n1).predicted_counts() == (n1,)


class TestLocalFactorGenus2:
    def test_reference_factor_at_3(self):
        assert local_factor_genus2(3, 8, 10).coeffs == (4, 8, 12, 9)

    def test_functional_equation(self):
        factor = local_factor_genus2(3, 8, 10)
        c1, c2, c3, c4 = factor.coeffs
        assert c3 == 3 * c1 and c4 == 9

    def test_non_integral_c2_rejected(self):
        with pytest.raises(InconsistentCounts):
            local_factor_genus2(3, 8, 9)

    def test_weil_bound_rejected(self):
        with pytest.raises(InconsistentCounts):
            local_factor_genus2(3, 12, 10)

    def test_supersingular_x1_at_5(self):
        model = HyperellipticModel.from_coeffs(X1_COEFFS, 5)
        n1 = count_points(model, 5, 1)
        n2 = count_points(model, 5, 2)
        factor = local_factor_genus2(5, n1, n2)
        assert factor.coeffs[0] == 0

    def test_x2_at_11(self):
        model = HyperellipticModel.from_coeffs(X2_COEFFS, 11)
        n1 = count_points(model, 11, 1)
        n2 = count_points(model, 11, 2)
        factor = local_factor_genus2(11, n1, n2)
        c1, c2, _, _ = factor.coeffs
        assert abs(c1) == 4 and c2 == 8  # 11 = 3^2 + 2*1^2, so b = 1

    def test_zeta_roundtrip(self):
        for p in (3, 7, 11, 19, 23, 43, 59):
            for coeffs in (X1_COEFFS, X2_COEFFS):
                model = HyperellipticModel.from_coeffs(coeffs, p)
                n1 = count_points(model, p, 1)
                n2 = count_points(model, p, 2)
                factor = local_factor_genus2(p, n1, n2)
                assert factor.predicted_counts() == (n1, n2)


class TestSupersingularClasses:
    def test_traces_vanish_for_5_7_mod_8(self):
        for p in [q for q in sieve_upto(500) if q % 8 in (5, 7)]:
            e1 = HyperellipticModel.from_coeffs(E1_COEFFS, p)
            assert count_points(e1, p, 1) == p + 1
            x2 = HyperellipticModel.from_coeffs(X2_COEFFS, p)
            assert count_points(x2, p, 1) - p - 1 == 0  # c1 = 0


class TestTraceIdentity:
    @pytest.mark.parametrize("p", [3, 5, 17])
    def test_reference_primes(self, p):
        assert trace_identity_check(p)

    def test_over_range(self):
        for p in [q for q in sieve_upto(1000) if q >= 3]:
            assert trace_identity_check(p)
            assert quadratic_twist_check(p)

    def test_twist_reference_values(self):
        assert quadratic_twist_check(3)  # -2 = (-1)*2
        assert quadratic_twist_check(13)  # both sums vanish
        assert quadratic_twist_check(17)


class TestKummerCharacter:
    def test_primitive_at_11(self):
        v = kummer_character(11, 1)
        assert v.is_primitive_fourth_root
        assert v.value_str in ("i", "-i")

    def test_trivial_classes(self):
        assert kummer_character(5, 3).exponent == 0
        assert kummer_character(7, 2).exponent == 0
        assert kummer_character(5, 3).value_str == "1"

    def test_k_zero(self):
        for p in (3, 5, 7, 11, 13):
            assert kummer_character(p, 0).exponent == 0

    def test_wrong_class(self):
        with pytest.raises(WrongResidueClass):
            kummer_character(17, 1)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            kummer_character(11, 4)

    def test_case_analysis_over_range(self):
        for p in [q for q in sieve_upto(500) if q % 8 in (3, 5, 7)]:
            for k in (1, 2, 3):
                v = kummer_character(p, k)
                if p % 8 == 3:
                    # value is i^(+-k): primitive for odd k, -1 for k = 2
                    assert v.exponent in (k % 4, -k % 4)
                else:
                    assert v.exponent == 0

    def test_inverse_pairs(self):
        for p in [q for q in sieve_upto(300) if q % 8 in (3, 5, 7)]:
            for k in (1, 2, 3):
                a = kummer_character(p, k).exponent
                b = kummer_character(p, (4 - k) % 4).exponent
                assert (a + b) % 4 == 0


class TestSqrt2MinusOne:
    def test_nonsquare_for_3_mod_8(self):
        for p in [q for q in sieve_upto(500) if q % 8 == 3]:
            assert sqrt2_minus_one_is_nonsquare(p)
