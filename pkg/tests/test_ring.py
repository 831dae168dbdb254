'''The truncated ring K(P^n)[y].'''

import pytest
from hypothesis import given, settings, strategies as st

from kcones import (
    DimensionMismatchError, InexactDivisionError, TruncatedClass,
    divide_exact_y, mc_projective_space, ring_ops)
from kcones.yrational import ONE, Y

from .strategies import truncated_classes


def H(n):
    return TruncatedClass.h_power(1, n)


class TestBases:
    def test_h_in_t_basis(self):
        assert H(2).t_coefficients() == (1, -1, 0)

    def test_t_basis_view(self):
        c = TruncatedClass.from_t([1, -1], 2)
        assert c == H(2)
        assert c.basis == 't'
        assert str(c) == '1 - t'
        assert str(c.convert_basis('H')) == 'H'

    def test_negative_power_of_t(self):
        # t^-1 = 1 + H modulo H^2
        c = TruncatedClass.from_t({-1: 1}, 1)
        assert c.h_coefficients() == (1, 1)
        assert c.t_coefficients() == (2, -1)

    def test_top_power_vanishes(self):
        assert TruncatedClass.h_power(3, 2).is_zero()
        assert (H(2)**3).is_zero()

    def test_unknown_basis(self):
        with pytest.raises(ValueError):
            TruncatedClass.one(1).convert_basis('x')

    @given(truncated_classes())
    def test_basis_change_keeps_value(self, c):
        assert TruncatedClass.from_t(list(c.t_coefficients()), c.n) == c


class TestArithmetic:
    @given(st.integers(min_value=0, max_value=3).flatmap(
        lambda n: st.tuples(*[truncated_classes(n=n)]*3)))
    def test_ring_laws(self, classes):
        a, b, c = classes
        assert (a*b)*c == a*(b*c)
        assert a*b == b*a
        assert a*(b+c) == a*b + a*c

    @settings(max_examples=30)
    @given(st.integers(min_value=0, max_value=3).flatmap(
        lambda n: truncated_classes(n=n)).filter(lambda c: bool(c.coeffs[0])))
    def test_inverse(self, c):
        assert c * c.inverse() == TruncatedClass.one(c.n)

    def test_non_unit(self):
        with pytest.raises(ZeroDivisionError):
            H(2).inverse()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            H(1) + H(2)

    def test_ring_ops(self):
        a, b = H(2), TruncatedClass.one(2)
        assert ring_ops(a, b, 'add') == a + b
        assert ring_ops(a, b, 'sub') == a - b
        assert ring_ops(a, a, 'mul') == TruncatedClass.h_power(2, 2)
        assert ring_ops(a, Y, 'scalar') == a.scale(Y)
        with pytest.raises(ValueError):
            ring_ops(a, b, 'div')
        with pytest.raises(DimensionMismatchError):
            ring_ops(a, H(3), 'mul')

    def test_specialize_y(self):
        assert mc_projective_space(2).at_y(0) == TruncatedClass.one(2)
        assert mc_projective_space(2).at_y(-1) == TruncatedClass.from_h([0, 0, 3], 2)

    def test_rehome(self):
        assert TruncatedClass.h_power(2, 2).rehome(1).is_zero()
        assert H(2).rehome(3) == H(3)

    def test_invalid(self):
        with pytest.raises(ValueError):
            TruncatedClass(-1, ())
        with pytest.raises(ValueError):
            TruncatedClass(2, (1, 2))


class TestDivideExact:
    def test_exact(self):
        c = mc_projective_space(2)
        assert divide_exact_y(c.scale(ONE + Y), ONE + Y) == c

    def test_rational_quotient(self):
        c = TruncatedClass.from_t([ONE, Y], 1)
        q = divide_exact_y(c, ONE + Y)
        assert q == TruncatedClass.from_h([ONE, -Y / (ONE + Y)], 1)
        assert q.scale(ONE + Y) == c

    @pytest.mark.parametrize('d', [ONE + Y, (ONE + Y)**2])
    @given(truncated_classes())
    def test_multiply_back(self, d, c):
        assert divide_exact_y(c.scale(d), d) == c
        assert divide_exact_y(c, d).scale(d) == c

    def test_strict_reports_position(self):
        c = TruncatedClass(1, (ONE + Y, Y))
        with pytest.raises(InexactDivisionError) as info:
            divide_exact_y(c, ONE + Y, strict=True)
        assert info.value.where == 'H^1'

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact_y(mc_projective_space(1), 0)

    def test_rejects_other_types(self):
        with pytest.raises(TypeError):
            divide_exact_y([1, 2], ONE + Y)
