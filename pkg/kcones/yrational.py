'''Exact rational functions in the genus parameter y.

`YRational` wraps an element of the sympy fraction field ZZ(y).  The field
keeps every value canceled by the full gcd (integer content included) with
a denominator of positive leading coefficient, so two values are equal
exactly when their stored numerators and denominators are.
'''

from fractions import Fraction
import numbers

import sympy
from sympy import QQ, ZZ, field
from sympy.polys.polyerrors import BasePolynomialError

from .errors import InexactDivisionError, PoleError


Y_FIELD, Y_GEN = field('y', ZZ)
Y_RING = Y_FIELD.ring
Y_SYMBOL = sympy.Symbol('y')


def _ascending(poly):
    '''Dense ascending integer coefficients of a univariate poly in y.'''
    if not poly:
        return [0]
    coeffs = [0] * (poly.degree() + 1)
    for (e,), c in poly.terms():
        coeffs[e] = int(c)
    return coeffs

def _from_ascending(coeffs):
    return Y_RING.from_dict({(e,): int(c) for e, c in enumerate(coeffs)
                             if int(c)})

def _from_sympy(expr):
    num, den = sympy.fraction(sympy.together(expr))
    try:
        parts = [sympy.Poly(p, Y_SYMBOL, domain=QQ).all_coeffs()
                 for p in (num, den)]
    except BasePolynomialError as e:
        raise ValueError(f'{expr} is not a rational function of y') from e
    values = []
    for coeffs in parts:
        acc = Y_FIELD(0)
        for c in coeffs:
            c = sympy.Rational(c)
            acc = acc * Y_GEN + Y_FIELD(int(c.p)) / Y_FIELD(int(c.q))
        values.append(acc)
    if not values[1]:
        raise PoleError(f'Zero denominator in {expr}')
    return values[0] / values[1]

def _render_poly(coeffs, var='y'):
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f'{var}^{e}'
            body = mono if mag == 1 else f'{mag}*{mono}'
        if not parts:
            parts.append(body if c > 0 else f'-{body}')
        else:
            parts.append(('+ ' if c > 0 else '- ') + body)
    return ' '.join(parts) if parts else '0'


class YRational:
    '''An immutable element of Q(y) with integer-coefficient numerator and
    denominator.

    Accepts ints, Fractions, YRational, sympy field elements, sympy
    expressions in `y` and strings such as `'(1+y)^2'`.
    '''
    __slots__ = ('value',)

    def __init__(self, value=0):
        object.__setattr__(self, 'value', self._coerce(value))
    def __setattr__(self, name, value):
        raise AttributeError('YRational is immutable')
    def __reduce__(self):
        return (YRational.from_json, (self.to_json(),))

    @staticmethod
    def _coerce(value):
        if isinstance(value, YRational):
            return value.value
        if isinstance(value, Fraction):
            return Y_FIELD(int(value.numerator)) / Y_FIELD(int(value.denominator))
        if isinstance(value, numbers.Integral):
            return Y_FIELD(int(value))
        if getattr(value, 'field', None) == Y_FIELD:
            return value
        if getattr(value, 'ring', None) == Y_RING:
            return Y_FIELD(value)
        if isinstance(value, str):
            from .codec import parse_expression
            value = parse_expression(value)
        if isinstance(value, sympy.Basic):
            return _from_sympy(value)
        raise TypeError(
            'Cannot interpret {!r} as a rational function of y'.format(value))

    @staticmethod
    def from_parts(numerator, denominator=(1,)):
        '''Build from ascending integer coefficient lists.'''
        den = _from_ascending(denominator)
        if not den:
            raise PoleError('Zero denominator')
        return YRational(Y_FIELD(_from_ascending(numerator)) / Y_FIELD(den))
    @staticmethod
    def from_json(obj):
        def parse(s):
            return [int(c) for c in str(s).split(',')]
        return YRational.from_parts(parse(obj['num']), parse(obj['den']))
    @staticmethod
    def y():
        return YRational(Y_GEN)

    @property
    def numerator(self):
        return _ascending(self.value.numer)
    @property
    def denominator(self):
        return _ascending(self.value.denom)

    def is_zero(self):
        return not self.value
    def is_polynomial(self):
        '''True when the denominator is a constant.'''
        return self.value.denom.is_ground
    def is_integral_polynomial(self):
        return self.value.denom == Y_RING.one
    def is_constant(self):
        return self.value.numer.is_ground and self.value.denom.is_ground

    def at(self, y0):
        '''Exact value at y=y0 as a Fraction.'''
        y0 = Fraction(y0)
        def horner(coeffs):
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * y0 + c
            return acc
        den = horner(self.denominator)
        if den == 0:
            raise PoleError(f'{self} has a pole at y={y0}')
        return horner(self.numerator) / den
    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f'{self} depends on y')
        return self.at(0)

    def divide_exact(self, divisor):
        '''Divide by `divisor`, which must leave a polynomial quotient
        whenever this value is a polynomial.'''
        divisor = YRational(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError('Division by the zero polynomial')
        quotient = YRational(self.value / divisor.value)
        if self.is_polynomial() and not quotient.is_polynomial():
            raise InexactDivisionError(self, divisor)
        return quotient

    def as_expr(self):
        return self.value.as_expr()
    def latex(self):
        return sympy.latex(self.as_expr())
    def to_json(self):
        return {
            'num': ','.join(map(str, self.numerator)),
            'den': ','.join(map(str, self.denominator)),
        }
    def needs_parens(self):
        '''Whether the rendering must be wrapped when used as a factor.'''
        return (not self.is_integral_polynomial()
                or sum(1 for c in self.numerator if c) > 1)

    def __str__(self):
        num = _render_poly(self.numerator)
        if self.is_integral_polynomial():
            return num
        den = _render_poly(self.denominator)
        return f'({num})/({den})'
    def __repr__(self):
        return f'YRational({str(self)!r})'
    def __hash__(self):
        return hash(self.value)
    def __eq__(self, other):
        try:
            other = YRational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.value == other.value
    def __bool__(self):
        return bool(self.value)

    def __neg__(self):
        return YRational(-self.value)
    def __pos__(self):
        return self
    def __add__(self, other):
        try:
            other = YRational(other)
        except TypeError:
            return NotImplemented
        return YRational(self.value + other.value)
    __radd__ = __add__
    def __sub__(self, other):
        try:
            other = YRational(other)
        except TypeError:
            return NotImplemented
        return YRational(self.value - other.value)
    def __rsub__(self, other):
        return YRational(other) - self
    def __mul__(self, other):
        try:
            other = YRational(other)
        except TypeError:
            return NotImplemented
        return YRational(self.value * other.value)
    __rmul__ = __mul__
    def __truediv__(self, other):
        try:
            other = YRational(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError(f'Division of {self} by zero')
        return YRational(self.value / other.value)
    def __rtruediv__(self, other):
        return YRational(other) / self
    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        if exponent < 0:
            if self.is_zero():
                raise ZeroDivisionError('Negative power of zero')
            return ONE / YRational(self.value ** -int(exponent))
        return YRational(self.value ** int(exponent))


ZERO = YRational(0)
ONE = YRational(1)
Y = YRational.y()
ONE_PLUS_Y = ONE + Y
