"""Polynomial arithmetic, q-objects, cyclotomics, and the polynomial families."""
from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkinlab import polynomials as poly
from motzkinlab import sequences as seq
from motzkinlab.polynomials import (DivisionByZeroPolynomial, NotDivisible,
                                    Poly, ZERO, ONE, big_schroder_poly,
                                    cyclotomic, q_binomial, q_integer, s_poly,
                                    w_poly)

Q = Poly((0, 1))

small_ints = st.integers(-50, 50)
coeff_lists = st.lists(small_ints, min_size=0, max_size=8)


class TestRingOps:
    def test_difference_of_squares(self):
        assert (Q + 1) * (Q - 1) == Poly((-1, 0, 1))

    def test_additive_identity(self):
        p = Poly((3, -2, 7))
        assert p + ZERO == p
        assert ZERO + p == p

    def test_cube_by_repeated_multiplication(self):
        p = Poly((1, 1))
        expected = p * p * p
        assert p ** 3 == expected == Poly((1, 3, 3, 1))

    def test_scalar_and_fraction_ops(self):
        p = Poly((1, 2))
        assert 3 * p == Poly((3, 6))
        assert p.scaled(Fraction(1, 2)) == Poly((Fraction(1, 2), 1))
        assert not p.scaled(Fraction(1, 2)).is_integral()
        assert (2 * p).scaled(Fraction(1, 2)).is_integral()

    def test_zero_degree_sentinel(self):
        assert ZERO.degree is None
        assert Poly((5,)).degree == 0
        with pytest.raises(TypeError):
            ZERO.degree + 1

    @given(coeff_lists, coeff_lists)
    @settings(max_examples=150, deadline=None)
    def test_mul_commutes_and_matches_schoolbook(self, a, b):
        pa, pb = Poly(a), Poly(b)
        prod = pa * pb
        assert prod == pb * pa
        if pa.coeffs and pb.coeffs:
            assert prod == Poly(poly._mul_school(pa.coeffs, pb.coeffs))

    @given(st.lists(st.integers(-10 ** 9, 10 ** 9), min_size=60, max_size=90),
           st.lists(st.integers(-10 ** 9, 10 ** 9), min_size=60, max_size=90))
    @settings(max_examples=20, deadline=None)
    def test_kronecker_path_matches_schoolbook(self, a, b):
        # operands above the size threshold take the packed-integer path
        pa, pb = Poly(a), Poly(b)
        if pa.is_zero or pb.is_zero:
            return
        assert pa * pb == Poly(poly._mul_school(pa.coeffs, pb.coeffs))

    @given(coeff_lists, coeff_lists, coeff_lists, st.integers(-9, 9))
    @settings(max_examples=150, deadline=None)
    def test_evaluation_homomorphism(self, a, b, c, x):
        pa, pb, pc = Poly(a), Poly(b), Poly(c)
        assert (pa * pb + pc)(x) == pa(x) * pb(x) + pc(x)


class TestExactDivision:
    def test_simple_quotient(self):
        assert Poly((-1, 0, 1)).exact_div(Poly((-1, 1))) == Poly((1, 1))

    def test_cyclotomic_factorization_brute_force(self):
        q6 = Poly((-1, 0, 0, 0, 0, 0, 1))
        divisor = Poly((-1, 1)) * Poly((1, 1)) * Poly((1, 1, 1))
        assert q6.exact_div(divisor) == Poly((1, -1, 1))

    def test_not_divisible_carries_remainder(self):
        with pytest.raises(NotDivisible) as exc:
            Poly((1, 0, 1)).exact_div(Poly((-1, 1)))
        assert exc.value.remainder == Poly((2,))

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroPolynomial):
            Poly((1, 1)).exact_div(ZERO)

    def test_integer_divisibility_is_strict(self):
        # q^2 = (2q) * (q/2) only over the rationals
        with pytest.raises(NotDivisible):
            Poly((0, 0, 1)).exact_div(Poly((0, 2)))

    @given(coeff_lists, st.lists(small_ints, min_size=1, max_size=5))
    @settings(max_examples=150, deadline=None)
    def test_div_rem_reconstructs(self, a, b):
        pa, pb = Poly(a), Poly(b)
        if pb.is_zero:
            return
        q, r = pa.div_rem(pb)
        assert q * pb + r == pa
        assert r.is_zero or r.degree < pb.degree


class TestQObjects:
    def test_q_integer_small(self):
        assert q_integer(1) == ONE
        assert q_integer(3) == Poly((1, 1, 1))
        assert q_integer(0).is_zero

    def test_q_integer_at_one(self):
        for n in range(101):
            assert q_integer(n)(1) == n

    def test_q_binomial_4_2(self):
        assert q_binomial(4, 2) == Poly((1, 1, 2, 1, 1))

    @pytest.mark.parametrize("n", [0, 1, 5, 23])
    def test_q_binomial_k_zero(self, n):
        assert q_binomial(n, 0) == ONE

    def test_q_binomial_k_above_n(self):
        assert q_binomial(3, 5).is_zero

    def test_q_binomial_at_one_is_binomial(self):
        for n in range(41):
            for k in range(n + 1):
                assert q_binomial(n, k)(1) == math.comb(n, k)

    def test_q_binomial_nonnegative_and_symmetric(self):
        for n in range(31):
            for k in range(n + 1):
                cs = q_binomial(n, k).coeffs
                assert all(c >= 0 for c in cs)
                top = k * (n - k)
                assert len(cs) == top + 1 or (not cs and top == 0)
                for j in range(len(cs)):
                    assert cs[j] == cs[top - j]

    def test_q_binomial_product_formula(self):
        # [n k]_q * prod [j]_q = prod [n-j]_q
        for n in range(2, 12):
            for k in range(1, n + 1):
                lhs = q_binomial(n, k)
                for j in range(1, k + 1):
                    lhs = lhs * q_integer(j)
                rhs = ONE
                for j in range(k):
                    rhs = rhs * q_integer(n - j)
                assert lhs == rhs


class TestCyclotomic:
    def test_first_two(self):
        assert cyclotomic(1) == Poly((-1, 1))
        assert cyclotomic(2) == Poly((1, 1))

    def test_sixth(self):
        assert cyclotomic(6) == Poly((1, -1, 1))

    def test_product_over_divisors(self):
        for n in range(1, 121):
            prod = ONE
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic(d)
            expected = Poly((-1,) + (0,) * (n - 1) + (1,))
            assert prod == expected

    def test_prime_cyclotomic_is_q_integer(self):
        from motzkinlab.modular import primes_in
        for p in primes_in(2, 100):
            assert cyclotomic(p) == q_integer(p)

    def test_q_lucas_reduction(self):
        # [ad+s, bd+t]_q = C(a,b) * [s t]_q  (mod cyclotomic(d)) for prime d
        for d in (2, 3, 5):
            phi = cyclotomic(d)
            for a in range(5):
                for b in range(5):
                    for s in range(d):
                        for t in range(d):
                            lhs = q_binomial(a * d + s, b * d + t)
                            rhs = math.comb(a, b) * q_binomial(s, t)
                            assert ((lhs - rhs) % phi).is_zero


class TestAgainstSympy:
    """Cross-checks against an independent computer-algebra implementation."""

    def test_cyclotomic_matches_sympy(self):
        sympy = pytest.importorskip("sympy")
        q = sympy.symbols("q")
        for n in range(1, 61):
            ours = sympy.Poly(cyclotomic(n).coeffs[::-1], q)
            theirs = sympy.Poly(sympy.cyclotomic_poly(n, q), q)
            assert ours == theirs

    def test_q_binomial_integer_evaluations(self):
        # product formula prod_j [n-j]_q / prod_j [j]_q at integer q
        for n in range(12):
            for k in range(n + 1):
                for q0 in (2, 3, -2):
                    num = 1
                    den = 1
                    for j in range(k):
                        num *= (q0 ** (n - j) - 1) // (q0 - 1)
                        den *= (q0 ** (j + 1) - 1) // (q0 - 1)
                    assert q_binomial(n, k)(q0) * den == num


class TestFamilies:
    def test_s_poly_small(self):
        assert s_poly(1) == ONE
        assert s_poly(2) == Poly((1, 2))

    def test_s_poly_at_one_is_little_schroder(self):
        for n in range(1, 101):
            assert s_poly(n)(1) == seq.schroder_little(n)

    def test_big_schroder_small(self):
        assert big_schroder_poly(2, 1) == Poly((1, 3, 2))
        assert big_schroder_poly(0, 3) == ONE

    def test_big_schroder_factorization(self):
        for n in range(1, 101):
            assert big_schroder_poly(n, 1) == Poly((1, 1)) * s_poly(n)

    def test_big_schroder_higher_powers(self):
        for n in range(6):
            p1 = big_schroder_poly(n, 1)
            p3 = big_schroder_poly(n, 3)
            assert p3.coeffs == tuple(c ** 3 for c in p1.coeffs)

    def test_w_poly_small(self):
        assert w_poly(2, 1) == Poly((1, 2))
        assert w_poly(1, 7) == ONE

    def test_w_poly_equals_s_poly(self):
        for n in range(1, 61):
            assert w_poly(n, 1) == s_poly(n)

    def test_w_poly_higher_powers(self):
        for n in range(1, 8):
            p = w_poly(n, 2)
            assert p.coeffs == tuple(seq.w_coeff(n, k) ** 2 for k in range(1, n + 1))


class TestRenderParse:
    @pytest.mark.parametrize("coeffs,text", [
        ((), "0"),
        ((5,), "5"),
        ((-1, 2), "-1 + 2*x"),
        ((0, 1), "x"),
        ((1, 0, -1), "1 - x^2"),
        ((0, -1, 0, 3), "-x + 3*x^3"),
    ])
    def test_render_examples(self, coeffs, text):
        assert Poly(coeffs).render() == text

    def test_render_q_variable(self):
        assert q_integer(3).render("q") == "1 + q + q^2"

    def test_parse_examples(self):
        assert Poly.parse("1 + q + q^2") == q_integer(3)
        assert Poly.parse("0") == ZERO
        assert Poly.parse("-x + 3*x^3") == Poly((0, -1, 0, 3))
        assert Poly.parse("1/2 + 3/4*x") == Poly((Fraction(1, 2), Fraction(3, 4)))

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            Poly.parse("x + y")
        with pytest.raises(ValueError):
            Poly.parse("1 + ???")

    @given(coeff_lists)
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, coeffs):
        p = Poly(coeffs)
        assert Poly.parse(p.render()) == p

    @given(st.lists(st.fractions(min_value=-30, max_value=30, max_denominator=9),
                    min_size=0, max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_round_trip_fractions(self, coeffs):
        p = Poly(coeffs)
        assert Poly.parse(p.render("t")) == p
