'''Hilbert series, K-polynomials and Hilbert polynomials.

A subvariety X of P^n with homogeneous coordinate ring S/I has Hilbert
series K_X(t)/(1-t)^(n+1).  The numerator K_X reduces to the sheaf class
[O_X] in K(P^n), and the Hilbert polynomial is read off that class.
'''

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial
import dataclasses
import logging
import re
from typing import Mapping, Tuple

import numpy as np
import sympy

from .codec import parse_expression, parse_t_polynomial
from .config import resolve
from .errors import ParseError, ResourceCapError
from .ring import TruncatedClass, t_power_in_h


logger = logging.getLogger(__name__)

M_SYMBOL = sympy.Symbol('m')
VARIABLE = re.compile(r'^x([0-9]+)$')


def minimalize(generators, num_vars):
    '''Drop duplicates and every generator divisible by another one.'''
    if len(generators) == 0:
        return ()
    arr = np.unique(np.asarray(generators, dtype=np.int64).reshape(-1, num_vars),
                    axis=0)
    # divides[i, j]: generator j divides generator i
    divides = np.all(arr[None, :, :] <= arr[:, None, :], axis=2)
    np.fill_diagonal(divides, False)
    keep = arr[~divides.any(axis=1)]
    return tuple(sorted(tuple(int(e) for e in row) for row in keep.tolist()))


@dataclasses.dataclass(frozen=True)
class MonomialIdeal:
    '''A monomial ideal in x0..x_(num_vars-1), stored by its minimal
    generators.'''
    num_vars: int
    generators: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError('Need at least one variable')
        gens = [tuple(int(e) for e in g) for g in self.generators]
        for g in gens:
            if len(g) != self.num_vars or min(g, default=0) < 0:
                raise ValueError(f'Bad exponent vector {g} for '
                                 f'{self.num_vars} variables')
        object.__setattr__(self, 'generators', minimalize(gens, self.num_vars))

    @staticmethod
    def parse(text, num_vars):
        '''Parse `x0*x3, x0^2*x2`; the empty string is the zero ideal.'''
        gens = []
        for part in text.split(','):
            part = part.strip()
            if not part:
                continue
            expr = parse_expression(part)
            exps = [0] * num_vars
            for base, e in expr.as_powers_dict().items():
                if base == 1:
                    continue
                m = VARIABLE.match(str(base)) if isinstance(base, sympy.Symbol) else None
                if m is None or not e.is_Integer or e < 0:
                    raise ParseError(f'{part!r} is not a monomial in x0..x{num_vars-1}')
                idx = int(m.group(1))
                if idx >= num_vars:
                    raise ParseError(
                        f'Variable x{idx} out of range for {num_vars} variables')
                exps[idx] += int(e)
            gens.append(tuple(exps))
        return MonomialIdeal(num_vars, tuple(gens))
    @staticmethod
    def coordinate(indices, num_vars):
        '''The ideal generated by the variables x_i for i in indices.'''
        return MonomialIdeal(num_vars, tuple(
            tuple(int(i == j) for j in range(num_vars)) for i in indices))

    def _check(self, other):
        if other.num_vars != self.num_vars:
            raise ValueError('Ideals live in different polynomial rings')
    def product(self, other):
        self._check(other)
        return MonomialIdeal(self.num_vars, tuple(
            tuple(a+b for a, b in zip(g, h))
            for g in self.generators for h in other.generators))
    def intersection(self, other):
        self._check(other)
        return MonomialIdeal(self.num_vars, tuple(
            tuple(max(a, b) for a, b in zip(g, h))
            for g in self.generators for h in other.generators))
    def contains(self, monomial):
        m = np.asarray(monomial)
        return any(np.all(m >= np.asarray(g)) for g in self.generators)
    def __str__(self):
        parts = []
        for g in self.generators:
            mono = '*'.join(f'x{i}' if e == 1 else f'x{i}^{e}'
                            for i, e in enumerate(g) if e)
            parts.append(mono or '1')
        return ', '.join(parts)


@dataclasses.dataclass(frozen=True)
class KPolynomial:
    '''Numerator of a Hilbert series over (1-t)^(n+1), stored as a map from
    t exponents to nonzero integers.'''
    n: int
    coeffs: Mapping[int, int]

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.coeffs).items():
            if int(c):
                clean[int(e)] = clean.get(int(e), 0) + int(c)
        object.__setattr__(self, 'coeffs',
                           {e: c for e, c in sorted(clean.items()) if c})

    @staticmethod
    def parse(text, n):
        coeffs = {}
        for e, c in parse_t_polynomial(text).items():
            if not (c.is_constant() and c.to_fraction().denominator == 1):
                raise ParseError(f'K-polynomial coefficients must be integers: {c}')
            coeffs[e] = int(c.to_fraction())
        return KPolynomial(n, coeffs)
    @staticmethod
    def one(n):
        return KPolynomial(n, {0: 1})

    def degree(self):
        return max(self.coeffs, default=0)
    def h_expansion(self):
        '''Exact coefficients in powers of H = 1-t (no truncation).'''
        if any(e < 0 for e in self.coeffs):
            raise ValueError('Negative powers of t have no finite H-expansion')
        out = [0] * (self.degree() + 1)
        for e, c in self.coeffs.items():
            for i, b in enumerate(t_power_in_h(e, e)):
                out[i] += c * b
        return out
    def as_expr(self):
        t = sympy.Symbol('t')
        return sum((c * t**e for e, c in self.coeffs.items()), sympy.Integer(0))
    def __str__(self):
        parts = []
        for e, c in self.coeffs.items():
            mono = '' if e == 0 else 't' if e == 1 else f't^{e}'
            if not mono:
                parts.append(str(c))
            elif c in (1, -1):
                parts.append(('-' if c < 0 else '') + mono)
            else:
                parts.append(f'{c}*{mono}')
        return ' + '.join(parts).replace('+ -', '- ') if parts else '0'
    def to_json(self):
        return {'n': self.n, 'text': str(self),
                'coeffs': [[e, c] for e, c in self.coeffs.items()]}


@dataclasses.dataclass(frozen=True)
class HilbertPolynomial:
    '''Hilbert polynomial in m with exact rational coefficients.'''
    poly: sympy.Poly

    @property
    def coefficients(self):
        '''Ascending coefficients as Fractions.'''
        return [Fraction(int(c.p), int(c.q)) for c in reversed(self.poly.all_coeffs())]
    def __call__(self, m):
        value = sympy.Rational(self.poly.eval(sympy.Integer(m)))
        return Fraction(int(value.p), int(value.q))
    def is_integer_valued(self, window=range(0, 32)):
        return all(self(m).denominator == 1 for m in window)
    def binomial_basis(self):
        '''c_r with P(m) = sum_r c_r * C(m+r, r).'''
        remaining = self.poly
        deg = 0 if remaining.is_zero else remaining.degree()
        out = [Fraction(0)] * (deg + 1)
        while not remaining.is_zero:
            r = remaining.degree()
            lc = sympy.Rational(remaining.LC())
            c = lc * factorial(r)
            out[r] = Fraction(int(c.p), int(c.q))
            remaining = remaining - _binomial_poly(r) * c
        return out
    def render_binomial(self):
        parts = []
        for r, c in enumerate(self.binomial_basis()):
            if c:
                mono = f'C(m+{r},{r})' if r else '1'
                parts.append(mono if c == 1 else f'{c}*{mono}')
        return ' + '.join(parts).replace('+ -', '- ') if parts else '0'
    def __str__(self):
        parts = []
        for e, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = '' if e == 0 else 'm' if e == 1 else f'm^{e}'
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append('-' + mono)
            else:
                parts.append(f'{c}*{mono}')
        return ' + '.join(parts).replace('+ -', '- ') if parts else '0'
    def to_json(self):
        return {'coeffs': [str(c) for c in self.coefficients],
                'binomial': [str(c) for c in self.binomial_basis()],
                'text': str(self)}


def _binomial_poly(r):
    '''C(m+r, r) as a polynomial in m.'''
    expr = sympy.Integer(1)
    for j in range(1, r+1):
        expr *= (M_SYMBOL + j)
    return sympy.Poly(expr / factorial(r), M_SYMBOL, domain=sympy.QQ)


def kpoly_from_monomial_ideal(I, config=None):
    '''K-polynomial sum_S (-1)^|S| t^deg(lcm S) over subsets S of the
    generators.

    Subsets are folded in one generator at a time, merging terms with equal
    lcm, which gives the same exact sum.
    '''
    config = resolve(config)
    gens = I.generators
    if len(gens) > config.generator_cap:
        raise ResourceCapError(len(gens), config.generator_cap)
    acc = {(0,) * I.num_vars: 1}
    for g in gens:
        g = np.asarray(g, dtype=np.int64)
        new = dict(acc)
        for m, c in acc.items():
            l = tuple(int(e) for e in np.maximum(np.asarray(m), g))
            new[l] = new.get(l, 0) - c
        acc = {m: c for m, c in new.items() if c}
    logger.debug('K-polynomial of %d generators from %d lcm classes',
                 len(gens), len(acc))
    coeffs = {}
    for m, c in acc.items():
        coeffs[sum(m)] = coeffs.get(sum(m), 0) + c
    return KPolynomial(I.num_vars - 1, coeffs)

def hilbert_series_coefficients(k, J):
    '''h_0..h_J of K(t) * sum_j C(n+j, n) t^j.'''
    if J < 0:
        raise ValueError(f'J must be nonnegative: {J}')
    n = k.n
    return [sum(c * comb(n + j - e, n) for e, c in k.coeffs.items() if j >= e)
            for j in range(J+1)]

def sheaf_class_from_kpoly(k):
    return TruncatedClass.from_t(k.coeffs, k.n).convert_basis('H')

def hilbert_polynomial_from_class(c):
    '''sum q_i C(m+n-i, n-i) for a y-free class sum q_i H^i.'''
    if not c.is_y_free():
        raise ValueError(f'Hilbert polynomials need y-free classes: {c}')
    acc = sympy.Poly(0, M_SYMBOL, domain=sympy.QQ)
    for i, q in enumerate(c.coeffs):
        if q:
            f = q.to_fraction()
            acc = acc + _binomial_poly(c.n - i) * sympy.Rational(
                f.numerator, f.denominator)
    return HilbertPolynomial(acc)

def gamma_equivariant_sheaf_class(k):
    '''K_X(t) read as the Gamma-equivariant class of the affine cone.'''
    from .equivariant import AffineEquivariantClass
    from .laurent import LaurentExpr, TorusAction
    return AffineEquivariantClass(
        TorusAction.trivial(k.n),
        LaurentExpr.from_t_coefficients(k.coeffs, 0), gamma=True)

def count_standard_monomials(I, degree):
    '''Number of degree-`degree` monomials outside I, by enumeration.'''
    v = I.num_vars
    monomials = []
    for combo in combinations_with_replacement(range(v), degree):
        m = [0] * v
        for i in combo:
            m[i] += 1
        monomials.append(m)
    if not monomials:
        return 0
    mons = np.asarray(monomials, dtype=np.int64).reshape(-1, v)
    if not I.generators:
        return len(mons)
    gens = np.asarray(I.generators, dtype=np.int64)
    inside = np.all(mons[:, None, :] >= gens[None, :, :], axis=2).any(axis=1)
    return int((~inside).sum())
