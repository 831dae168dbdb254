'''Classes of subvarieties of P^n and their genera.'''

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kcones import (
    NonSplitBundleError, TruncatedClass, ZeroClassError, chi_y_plane_curve,
    chi_y_space_surface, complete_intersection_class, cubic, degree_codim,
    genus_report, integral, linear_inclusion_pushforward, mc_linear_subspace,
    mc_projective_space, mc_smooth_hypersurface, motivic_inclusion_exclusion,
    motivic_segre, push_along_self_map_p1, pushforward_self_map_p1,
    rational_normal_curve_class, split_divisor_mc, union_additive_pushforward,
    variety_triple)
from kcones.projective import CUBIC_NAMES, union_two_linear_triple
from kcones.yrational import ONE, Y

from .strategies import truncated_classes, y_rationals


def h(*coeffs, n):
    return TruncatedClass.from_h(coeffs, n)


CUBICS = [
    ('nodal', (0, 3, -3), (0, 3, -2), (0, 3, -3)),
    ('cuspidal', (0, 3, -3), (0, 3, -2), (0, 3, -2)),
    ('conic+line', (0, 3, -3), (0, 3, -1), (0, 3, -3)),
    ('conic+tangent', (0, 3, -3), (0, 3, -1), (0, 3, -2)),
    ('three-lines', (0, 3, -3), (0, 3, 0), (0, 3, -3)),
    ('three-concurrent-lines', (0, 3, -3), (0, 3, 0), (0, 3, -2)),
]


class TestPlaneCubics:
    @pytest.mark.parametrize('name,sheaf,pushforward,mc0', CUBICS)
    def test_classes(self, name, sheaf, pushforward, mc0):
        triple = cubic(name)
        assert triple.sheaf == h(*sheaf, n=2)
        assert triple.pushforward == h(*pushforward, n=2)
        assert triple.motivic0 == h(*mc0, n=2)
        assert triple.motivic.at_y(0) == triple.motivic0

    def test_every_name_is_listed(self):
        assert [row[0] for row in CUBICS] == list(CUBIC_NAMES)

    def test_unknown(self):
        with pytest.raises(ValueError, match='nodal'):
            cubic('smooth')

    def test_euler_characteristics(self):
        # y = -1 gives the topological Euler characteristic times the point
        assert integral(cubic('nodal').motivic.at_y(-1)) == 1
        assert integral(cubic('three-lines').motivic.at_y(-1)) == 3


class TestProjectiveSpace:
    @pytest.mark.parametrize('n', range(6))
    def test_chi_y(self, n):
        assert integral(mc_projective_space(n)) == sum(
            ((-Y)**i for i in range(1, n+1)), ONE)

    @pytest.mark.parametrize('n', range(5))
    def test_segre_of_ambient(self, n):
        assert motivic_segre(mc_projective_space(n)) == TruncatedClass.one(n)

    def test_linear_subspace(self):
        c = variety_triple('linear', 1, 3)
        assert c.pushforward == TruncatedClass.h_power(2, 3)
        assert c.motivic == mc_linear_subspace(1, 3)
        with pytest.raises(ValueError):
            variety_triple('linear', 4, 3)


class TestHypersurfaces:
    def test_complete_intersection(self):
        assert complete_intersection_class([3], 2) == h(0, 3, -3, n=2)
        assert complete_intersection_class([2, 2], 3) == h(0, 0, 4, -4, n=3)

    @pytest.mark.parametrize('degrees,n', [([], 2), ([2, 2, 2], 2), ([0], 2)])
    def test_complete_intersection_errors(self, degrees, n):
        with pytest.raises(ValueError):
            complete_intersection_class(degrees, n)

    def test_plane_cubic_genus(self):
        report = genus_report(mc_smooth_hypersurface(3, 2), 1)
        assert report.chi_y == 0
        assert report.todd == 0
        assert report.arithmetic_genus == 1

    def test_quartic_surface(self):
        assert integral(mc_smooth_hypersurface(4, 3)) == 2 - 20*Y + 2*Y*Y

    @pytest.mark.parametrize('d', range(1, 7))
    def test_closed_forms(self, d):
        assert integral(mc_smooth_hypersurface(d, 2)) == chi_y_plane_curve(d)
        assert integral(mc_smooth_hypersurface(d, 3)) == chi_y_space_surface(d)

    def test_degree_one_is_a_hyperplane(self):
        assert mc_smooth_hypersurface(1, 3) == mc_linear_subspace(2, 3)

    def test_non_split_bundle(self):
        with pytest.raises(NonSplitBundleError):
            split_divisor_mc([Fraction(1, 2)], mc_projective_space(2))


class TestCurves:
    def test_self_map(self):
        assert pushforward_self_map_p1(3) == h(3, -2, n=1)
        assert push_along_self_map_p1(mc_projective_space(1), 1) == (
            mc_projective_space(1))
        with pytest.raises(ValueError):
            pushforward_self_map_p1(0)

    def test_rational_normal_curve(self):
        assert rational_normal_curve_class(3) == h(0, 0, 3, -2, n=3)
        report = genus_report(variety_triple('rnc', 3).motivic, 1)
        assert report.todd == 1
        assert report.chi_y == 1 - Y


class TestUnions:
    def test_two_skew_lines_in_p3(self):
        triple = union_two_linear_triple(2, 2, 3)
        assert triple.sheaf == h(0, 0, 2, n=3)
        assert triple.pushforward == h(0, 0, 2, n=3)
        assert triple.motivic0 == h(0, 0, 2, n=3)

    def test_two_lines_in_p2(self):
        triple = variety_triple('union-linear', 1, 1, 2)
        assert triple.sheaf == h(0, 2, -1, n=2)
        assert triple.pushforward == h(0, 2, n=2)
        assert triple.motivic0 == h(0, 2, -1, n=2)

    def test_bad_overlap_key(self):
        line = mc_linear_subspace(1, 2)
        with pytest.raises(ValueError):
            motivic_inclusion_exclusion([line, line], {frozenset({0}): line})

    @given(st.integers(min_value=0, max_value=3).flatmap(
        lambda n: st.lists(truncated_classes(n=n), min_size=1, max_size=4)))
    def test_sum_rule(self, parts):
        union = union_additive_pushforward(parts)
        assert union == sum(parts[1:], parts[0])
        assert integral(union) == sum((integral(c) for c in parts[1:]),
                                      integral(parts[0]))

    def test_dimensions_must_agree(self):
        with pytest.raises(ValueError):
            union_additive_pushforward([mc_projective_space(1),
                                        mc_projective_space(2)])


class TestEmbedding:
    @given(st.integers(min_value=0, max_value=3).flatmap(
               lambda n: truncated_classes(n=n, coefficients=y_rationals())),
           st.integers(min_value=0, max_value=3))
    def test_chi_y_is_independent_of_the_embedding(self, mc, extra):
        pushed = linear_inclusion_pushforward(mc, mc.n, mc.n + extra)
        assert pushed.n == mc.n + extra
        assert integral(pushed) == integral(mc)

    @pytest.mark.parametrize('n', range(1, 7))
    @pytest.mark.parametrize('d', range(1, 7))
    def test_hypersurface_at_y_zero_is_its_sheaf_class(self, d, n):
        assert complete_intersection_class([d], n) == (
            mc_smooth_hypersurface(d, n).at_y(0))


class TestDescriptors:
    def test_codim_degree(self):
        assert degree_codim(h(0, 3, -3, n=2)) == (1, 3)
        with pytest.raises(ZeroClassError):
            degree_codim(TruncatedClass.zero(2))

    def test_ci_descriptor(self):
        triple = variety_triple('ci', '2,2', 3)
        assert triple.dim == 1
        assert triple.sheaf == complete_intersection_class([2, 2], 3)

    @pytest.mark.parametrize('words', [
        ('nope',), ('linear', 'a', '2'), ('rnc', 0), ('cubic',)])
    def test_invalid(self, words):
        with pytest.raises(ValueError):
            variety_triple(*words)
