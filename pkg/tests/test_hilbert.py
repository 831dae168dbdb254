'''Hilbert series and K-polynomials of monomial ideals.'''

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from kcones import (
    Config, KPolynomial, MonomialIdeal, ParseError, ResourceCapError,
    TruncatedClass, gamma_equivariant_sheaf_class, hilbert_polynomial_from_class,
    hilbert_series_coefficients, kirwan, kpoly_from_monomial_ideal,
    sheaf_class_from_kpoly)
from kcones.hilbert import count_standard_monomials


@st.composite
def monomial_ideals(draw):
    num_vars = draw(st.integers(min_value=1, max_value=4))
    exponent = st.integers(min_value=0, max_value=3)
    gens = draw(st.lists(st.tuples(*[exponent]*num_vars), max_size=5))
    return MonomialIdeal(num_vars, tuple(gens))


class TestKPolynomial:
    def test_two_skew_lines_in_p3(self):
        ideal = MonomialIdeal.parse('x0*x2, x0*x3, x1*x2, x1*x3', 4)
        k = kpoly_from_monomial_ideal(ideal)
        assert str(k) == '1 - 4*t^2 + 4*t^3 - t^4'
        assert sheaf_class_from_kpoly(k) == TruncatedClass.from_h([0, 0, 2], 3)

    def test_zero_ideal(self):
        k = kpoly_from_monomial_ideal(MonomialIdeal(3))
        assert k == KPolynomial.one(2)
        assert hilbert_series_coefficients(k, 4) == [1, 3, 6, 10, 15]

    def test_unit_ideal(self):
        k = kpoly_from_monomial_ideal(MonomialIdeal(2, ((0, 0),)))
        assert k.coeffs == {}
        assert hilbert_series_coefficients(k, 3) == [0, 0, 0, 0]

    def test_parse(self):
        k = KPolynomial.parse('3*(1-t)^2 - 2*(1-t)^3', 2)
        assert str(k) == '1 - 3*t^2 + 2*t^3'
        with pytest.raises(ParseError):
            KPolynomial.parse('t/2', 2)

    def test_h_expansion(self):
        assert KPolynomial.parse('1 - t^2', 2).h_expansion() == [0, 2, -1]
        with pytest.raises(ValueError):
            KPolynomial(2, {-1: 1}).h_expansion()

    @settings(max_examples=60)
    @given(monomial_ideals())
    def test_series_counts_standard_monomials(self, ideal):
        k = kpoly_from_monomial_ideal(ideal)
        assert hilbert_series_coefficients(k, 8) == [
            count_standard_monomials(ideal, j) for j in range(9)]

    @settings(max_examples=60)
    @given(monomial_ideals(),
           st.dictionaries(st.integers(min_value=0, max_value=4),
                           st.integers(min_value=-3, max_value=3), max_size=3))
    def test_adding_a_multiple_of_the_denominator(self, ideal, g):
        k = kpoly_from_monomial_ideal(ideal)
        n = k.n
        shifted = dict(k.coeffs)
        for e, c in g.items():
            for i in range(n+2):
                shifted[e+i] = shifted.get(e+i, 0) + (-1)**i * comb(n+1, i) * c
        other = KPolynomial(n, shifted)
        assert sheaf_class_from_kpoly(other) == sheaf_class_from_kpoly(k)
        J = max(k.degree(), other.degree()) + n + 6
        before = hilbert_series_coefficients(k, J)
        after = hilbert_series_coefficients(other, J)
        assert [b - a for a, b in zip(before, after)] == [
            g.get(j, 0) for j in range(J+1)]
        changed = sum(a != b for a, b in zip(before, after))
        assert changed <= max(g, default=0) + n + 1

    def test_generator_cap(self):
        gens = []
        for combo in combinations_with_replacement(range(7), 2):
            g = [0] * 7
            for i in combo:
                g[i] += 1
            gens.append(tuple(g))
        ideal = MonomialIdeal(7, tuple(gens))
        assert len(ideal.generators) == 28
        with pytest.raises(ResourceCapError) as info:
            kpoly_from_monomial_ideal(ideal, Config(generator_cap=20))
        assert info.value.count == 28
        assert info.value.cap == 20


class TestMonomialIdeal:
    def test_minimal_generators(self):
        ideal = MonomialIdeal(2, ((1, 0), (2, 0), (1, 0), (0, 1)))
        assert ideal.generators == ((0, 1), (1, 0))

    def test_operations(self):
        a = MonomialIdeal.coordinate([0, 1], 4)
        b = MonomialIdeal.coordinate([2, 3], 4)
        assert a.product(b) == a.intersection(b)
        assert str(MonomialIdeal.parse('x1, x0^2*x1', 2)) == 'x1'
        assert a.contains((1, 0, 0, 5))
        assert not a.contains((0, 0, 1, 1))

    @pytest.mark.parametrize('text', ['x5', 'y0', 'x0^-1', 'x0 + x1', 'x0/x1'])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            MonomialIdeal.parse(text, 3)

    def test_count_standard_monomials(self):
        assert count_standard_monomials(MonomialIdeal.parse('x0*x1', 2), 2) == 2


class TestHilbertPolynomial:
    def test_conic(self):
        c = sheaf_class_from_kpoly(KPolynomial.parse('1 - t^2', 2))
        hp = hilbert_polynomial_from_class(c)
        assert hp.coefficients == [1, 2]
        assert hp.binomial_basis() == [-1, 2]
        assert hp(3) == 7
        assert str(hp) == '1 + 2*m'
        assert hp.is_integer_valued()

    def test_twisted_cubic(self):
        ideal = MonomialIdeal.parse('x0*x2, x0*x3, x1*x3', 4)
        hp = hilbert_polynomial_from_class(
            sheaf_class_from_kpoly(kpoly_from_monomial_ideal(ideal)))
        assert hp.coefficients == [1, 3]

    def test_needs_constant_class(self):
        from kcones import mc_projective_space
        with pytest.raises(ValueError):
            hilbert_polynomial_from_class(mc_projective_space(1))

    def test_rational_coefficients(self):
        hp = hilbert_polynomial_from_class(TruncatedClass.from_h([0, 0, 1], 2))
        assert hp.coefficients == [Fraction(1)]

    @settings(max_examples=60)
    @given(monomial_ideals())
    def test_agrees_with_the_series_from_the_degree_on(self, ideal):
        k = kpoly_from_monomial_ideal(ideal)
        hp = hilbert_polynomial_from_class(sheaf_class_from_kpoly(k))
        start = max(k.degree(), 0)
        series = hilbert_series_coefficients(k, start + 6)
        assert [hp(j) for j in range(start, start + 7)] == series[start:]


def test_gamma_class_maps_to_sheaf_class():
    k = KPolynomial.parse('1 - 4*t^2 + 4*t^3 - t^4', 3)
    reduced = kirwan(gamma_equivariant_sheaf_class(k))
    assert reduced.to_truncated() == sheaf_class_from_kpoly(k)

def test_point_configurations_share_a_class():
    generic = KPolynomial.parse('3*(1-t)^2 - 2*(1-t)^3', 2)
    collinear = KPolynomial.parse('3*(1-t)^2 - (t+2)*(1-t)^3', 2)
    assert generic != collinear
    assert (kirwan(gamma_equivariant_sheaf_class(generic))
            == kirwan(gamma_equivariant_sheaf_class(collinear)))
