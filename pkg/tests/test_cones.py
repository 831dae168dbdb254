import logging

import pytest
from hypothesis import given, settings, strategies as st

from kcones import (
    ConeResult, KPolynomial, TruncatedClass, complete_intersection_class,
    csm_projective_cone, hyperplane_restriction, integral, mc_projective_space,
    mc_smooth_hypersurface, motivic_segre, projective_cone_mc,
    projective_cone_mc0, projective_cone_pushforward, projective_cone_sheaf)
from kcones.yrational import ONE, Y

from .strategies import truncated_classes, y_polynomials


def h(*coeffs, n):
    return TruncatedClass.from_h(coeffs, n)

def quartic_cone_classes(d=4):
    motivic = projective_cone_mc(mc_smooth_hypersurface(d, 2),
                                 smooth=True).cone_class.at_y(0)
    sheaf = projective_cone_sheaf(KPolynomial(2, {0: 1, d: -1}))[1]
    push = projective_cone_pushforward(complete_intersection_class([d], 2))
    return motivic, sheaf, push


class TestPlaneQuartic:
    def test_motivic(self):
        motivic, _, _ = quartic_cone_classes()
        assert motivic == h(0, 4, -6, 3, n=3)

    def test_motivic_at_zero_from_todd(self):
        mc0 = complete_intersection_class([4], 2)
        assert projective_cone_mc0(mc0, -2) == h(0, 4, -6, 3, n=3)

    def test_sheaf(self):
        base, cone = projective_cone_sheaf(KPolynomial.parse('1 - t^4', 2))
        assert base == h(0, 4, -6, n=2)
        assert cone == h(0, 4, -6, 4, n=3)

    def test_pushforward(self):
        _, _, push = quartic_cone_classes()
        assert push == h(0, 4, -6, n=3)

    def test_integrals_differ(self):
        assert [integral(c) for c in quartic_cone_classes()] == [1, 2, -2]

    @pytest.mark.parametrize('d', [1, 2, 3])
    def test_low_degree_agrees(self, d):
        motivic, sheaf, _ = quartic_cone_classes(d)
        assert motivic == sheaf


class TestRecursion:
    @given(truncated_classes(coefficients=y_polynomials(max_degree=1)))
    def test_integral(self, c):
        cone = projective_cone_mc(c, smooth=True)
        assert integral(cone.cone_class) == ONE - Y*integral(c)
        assert cone.chi_y_base == integral(c)

    @settings(max_examples=25)
    @given(st.integers(min_value=0, max_value=3).flatmap(
        lambda n: truncated_classes(n=n)))
    def test_restricted_segre(self, c):
        cone = projective_cone_mc(c, smooth=True)
        assert cone.restricted_segre() == motivic_segre(c)

    def test_cone_over_point(self):
        # the cone over a point of P^0 is the line P^1
        cone = projective_cone_mc(mc_projective_space(0), smooth=True)
        assert cone.cone_class == mc_projective_space(1)

    def test_uncertified_base_is_logged(self, caplog):
        with caplog.at_level(logging.INFO, logger='kcones.cones'):
            cone = projective_cone_mc(mc_smooth_hypersurface(2, 2))
        assert not cone.smooth_certified
        assert 'not certified smooth' in caplog.text

    def test_result_dimensions(self):
        with pytest.raises(ValueError):
            ConeResult(TruncatedClass.one(1), TruncatedClass.one(1), ONE)


class TestCsm:
    def test_point(self):
        assert csm_projective_cone([0, 1]) == [0, 1, 2]

    def test_line(self):
        # csm(P^1 in P^2) = H + 2H^2; the cone is a plane in P^3
        assert csm_projective_cone([0, 1, 2]) == [0, 1, 3, 3]

    def test_empty(self):
        with pytest.raises(ValueError):
            csm_projective_cone([])


def test_hyperplane_restriction():
    assert hyperplane_restriction(h(0, 4, -6, 3, n=3)) == h(0, 4, -6, n=2)
    with pytest.raises(ValueError):
        hyperplane_restriction(TruncatedClass.one(0))
