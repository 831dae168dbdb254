'''The truncated ring K(P^n)[y] = Q(y)[t]/((1-t)^(n+1)).

Classes are stored by their coefficients in the hyperplane class H = 1-t.
'''

from math import comb
import dataclasses
import logging
from typing import Tuple

from .errors import DimensionMismatchError, InexactDivisionError
from .yrational import YRational, ZERO, ONE

logger = logging.getLogger(__name__)

BASES = ('H', 't')


def t_power_in_h(e, n):
    '''H-coefficients (length n+1) of t^e for any integer e.'''
    if e >= 0:
        return [(-1)**i * comb(e, i) for i in range(n+1)]
    m = -e
    # t^-m = (1-H)^-m
    return [comb(m+i-1, i) for i in range(n+1)]

def h_power_in_t(i, n):
    '''t-coefficients (length n+1) of H^i for 0 <= i <= n.'''
    return [(-1)**j * comb(i, j) if j <= i else 0 for j in range(n+1)]


@dataclasses.dataclass(frozen=True, eq=False)
class TruncatedClass:
    '''An element of K(P^n)[y] in reduced form.

    `coeffs` always holds the H-basis coefficients q_0..q_n.  `basis` is the
    preferred view; `coefficients` returns the coefficients in that view.
    '''
    n: int
    coeffs: Tuple[YRational, ...]
    basis: str = 'H'

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f'Ambient dimension must be nonnegative: {self.n}')
        if self.basis not in BASES:
            raise ValueError(f'Unknown basis {self.basis!r}')
        coeffs = tuple(YRational(c) for c in self.coeffs)
        if len(coeffs) != self.n+1:
            raise ValueError('Expected {} coefficients, got {}'.format(
                self.n+1, len(coeffs)))
        object.__setattr__(self, 'coeffs', coeffs)

    @staticmethod
    def zero(n):
        return TruncatedClass(n, (ZERO,)*(n+1))
    @staticmethod
    def one(n):
        return TruncatedClass.from_h([1], n)
    @staticmethod
    def h_power(i, n):
        '''H^i, which is zero for i > n.'''
        if i < 0:
            raise ValueError(f'Negative power of H: {i}')
        return TruncatedClass.from_h([0]*i + [1], n)
    @staticmethod
    def from_h(coeffs, n):
        '''Build from H-coefficients of any length, truncating above n.'''
        coeffs = [YRational(c) for c in coeffs][:n+1]
        coeffs += [ZERO] * (n+1 - len(coeffs))
        return TruncatedClass(n, tuple(coeffs))
    @staticmethod
    def from_t(coeffs, n):
        '''Reduce a polynomial in t given by a list (ascending) or a mapping
        from integer exponents (negative allowed) to coefficients.'''
        if not hasattr(coeffs, 'items'):
            coeffs = dict(enumerate(coeffs))
        out = [ZERO] * (n+1)
        for e, c in coeffs.items():
            c = YRational(c)
            if not c:
                continue
            for i, b in enumerate(t_power_in_h(int(e), n)):
                if b:
                    out[i] += b * c
        return TruncatedClass(n, tuple(out), basis='t')

    @property
    def coefficients(self):
        if self.basis == 'H':
            return self.coeffs
        return self.t_coefficients()
    def h_coefficients(self):
        return self.coeffs
    def t_coefficients(self):
        out = [ZERO] * (self.n+1)
        for i, q in enumerate(self.coeffs):
            if not q:
                continue
            for j, b in enumerate(h_power_in_t(i, self.n)):
                if b:
                    out[j] += b * q
        return tuple(out)

    def convert_basis(self, target):
        return convert_basis(self, target)
    def is_zero(self):
        return all(not q for q in self.coeffs)
    def is_polynomial(self):
        '''True when every coefficient is a polynomial in y.'''
        return all(q.is_polynomial() for q in self.coeffs)
    def is_y_free(self):
        return all(q.is_constant() for q in self.coeffs)
    def map_coefficients(self, fn):
        return TruncatedClass(self.n, tuple(fn(q) for q in self.coeffs),
                              self.basis)
    def at_y(self, y0):
        '''Specialize y to a number.'''
        return self.map_coefficients(lambda q: YRational(q.at(y0)))
    def rehome(self, n):
        '''Same H-coefficients viewed at another ambient dimension,
        truncating or padding with zeros.'''
        return TruncatedClass.from_h(self.coeffs, n)

    def inverse(self):
        '''Multiplicative inverse; H is nilpotent so c is a unit exactly
        when its constant term q_0 is nonzero.'''
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError(f'{self} is not a unit: constant term is 0')
        # c = c0(1 + N), N nilpotent of order n+1
        nil = TruncatedClass(self.n, (ZERO,) + tuple(q / c0 for q in self.coeffs[1:]))
        acc = TruncatedClass.one(self.n)
        power = TruncatedClass.one(self.n)
        for _ in range(self.n):
            power = -(power * nil)
            acc = acc + power
        return acc.scale(ONE / c0)

    def scale(self, s):
        s = YRational(s)
        return TruncatedClass(self.n, tuple(s*q for q in self.coeffs), self.basis)
    def _check(self, other):
        if not isinstance(other, TruncatedClass):
            raise TypeError(f'Expected TruncatedClass, got {type(other).__name__}')
        if other.n != self.n:
            raise DimensionMismatchError(self.n, other.n)
    def __add__(self, other):
        if not isinstance(other, TruncatedClass):
            return self + TruncatedClass.one(self.n).scale(other)
        self._check(other)
        return TruncatedClass(self.n, tuple(
            a+b for a, b in zip(self.coeffs, other.coeffs)), self.basis)
    __radd__ = __add__
    def __neg__(self):
        return self.scale(-1)
    def __sub__(self, other):
        return self + (-other)
    def __rsub__(self, other):
        return (-self) + other
    def __mul__(self, other):
        if not isinstance(other, TruncatedClass):
            return self.scale(other)
        self._check(other)
        out = [ZERO] * (self.n+1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[:self.n+1-i]):
                if b:
                    out[i+j] += a*b
        return TruncatedClass(self.n, tuple(out), self.basis)
    __rmul__ = __mul__
    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        acc = TruncatedClass.one(self.n)
        for _ in range(exponent):
            acc = acc * self
        return acc
    def __truediv__(self, other):
        if isinstance(other, TruncatedClass):
            return self * other.inverse()
        return self.scale(ONE / YRational(other))
    def __eq__(self, other):
        if not isinstance(other, TruncatedClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs
    def __hash__(self):
        return hash((self.n, self.coeffs))
    def __str__(self):
        from .codec import render_class
        return render_class(self)


def ring_ops(a, b, op):
    '''Apply `op` in ('add', 'sub', 'mul', 'scalar').  For 'scalar', `b` is
    a coefficient.'''
    if op == 'scalar':
        return a.scale(b)
    if not isinstance(b, TruncatedClass):
        raise TypeError(f'Expected TruncatedClass for {op}, got {type(b).__name__}')
    if a.n != b.n:
        raise DimensionMismatchError(a.n, b.n)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError(f'Unknown ring operation {op!r}')

def convert_basis(c, target):
    if target not in BASES:
        raise ValueError(f'Unknown basis {target!r}')
    return dataclasses.replace(c, basis=target)

def divide_exact_y(c, d, strict=False):
    '''Divide every coefficient of a TruncatedClass or a Laurent expression
    by the polynomial `d` in y.

    Quotients are taken in Q(y). With `strict` a polynomial coefficient
    must leave a polynomial quotient, otherwise InexactDivisionError names
    the offending position.
    '''
    d = YRational(d)
    if d.is_zero():
        raise ZeroDivisionError('Division by the zero polynomial')
    def div(q, where):
        if not strict:
            return q / d
        try:
            return q.divide_exact(d)
        except InexactDivisionError as e:
            raise InexactDivisionError(q, d, where=where) from e
    if isinstance(c, TruncatedClass):
        return TruncatedClass(c.n, tuple(div(q, f'H^{i}')
                                         for i, q in enumerate(c.coeffs)),
                              c.basis)
    if hasattr(c, 'map_coefficients_with_key'):
        return c.map_coefficients_with_key(div)
    raise TypeError(f'Cannot divide {type(c).__name__} by a polynomial in y')
