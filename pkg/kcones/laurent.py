'''Laurent expressions in torus characters and t, torus actions on C^(n+1)
and the reduced form of K_T(P^n)[y].

K_T(P^n) is presented as Z[alpha^+-1][t, t^-1] modulo the single relation
prod_i (1 - t/beta_i) = 0.  Its top t-coefficient (-1)^(n+1)/prod beta_i is
a unit monomial, so every class has a unique representative of t-degree
0..n, computed by `laurent_reduce`.
'''

from fractions import Fraction
from math import lcm
import dataclasses
import logging
from typing import Mapping, Optional, Tuple

import sympy

from .errors import DimensionMismatchError, FractionalExponentError
from .yrational import YRational, ZERO, ONE

logger = logging.getLogger(__name__)

T_SYMBOL = sympy.Symbol('t')


def alpha_symbols(rank):
    return tuple(sympy.Symbol(f'a{j+1}') for j in range(rank))


@dataclasses.dataclass(frozen=True, eq=False)
class LaurentExpr:
    '''A finite sum of coeff * alpha^a * t^e with YRational coefficients.

    `terms` maps (alpha exponent tuple, Fraction t exponent) to a nonzero
    coefficient.  t exponents must have denominators dividing `lattice`.
    '''
    rank: int
    terms: Mapping[Tuple[Tuple[int, ...], Fraction], YRational]
    lattice: int = 1

    def __post_init__(self):
        if self.lattice < 1:
            raise ValueError(f'Lattice level must be positive: {self.lattice}')
        clean = {}
        for (alpha, e), c in self.terms.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.rank:
                raise DimensionMismatchError(self.rank, len(alpha),
                                             what='torus rank')
            e = Fraction(e)
            if self.lattice % e.denominator:
                raise FractionalExponentError(
                    f't^{e} is not on the lattice 1/{self.lattice}')
            c = YRational(c)
            if c:
                key = (alpha, e)
                if key in clean:
                    c = clean[key] + c
                    if not c:
                        del clean[key]
                        continue
                clean[key] = c
        object.__setattr__(self, 'terms', clean)

    @staticmethod
    def zero(rank=0):
        return LaurentExpr(rank, {})
    @staticmethod
    def constant(c, rank=0):
        return LaurentExpr(rank, {((0,)*rank, Fraction(0)): c})
    @staticmethod
    def monomial(alpha=None, t=0, coeff=1, rank=None):
        if alpha is None:
            alpha = (0,) * (rank or 0)
        alpha = tuple(alpha)
        t = Fraction(t)
        return LaurentExpr(len(alpha), {(alpha, t): coeff},
                           lattice=t.denominator)
    @staticmethod
    def t_var(rank=0):
        return LaurentExpr.monomial((0,)*rank, 1)
    @staticmethod
    def from_t_coefficients(coeffs, rank=0):
        '''Polynomial in t with constant (YRational) coefficients.'''
        if not hasattr(coeffs, 'items'):
            coeffs = dict(enumerate(coeffs))
        return LaurentExpr(rank, {((0,)*rank, Fraction(e)): c
                                  for e, c in coeffs.items()})

    def is_zero(self):
        return not self.terms
    def has_t(self):
        return any(e != 0 for _, e in self.terms)
    def is_integral_t(self):
        return all(e.denominator == 1 for _, e in self.terms)
    def t_degree(self):
        '''Largest t exponent, or None for the zero expression.'''
        return max((e for _, e in self.terms), default=None)
    def min_t_degree(self):
        return min((e for _, e in self.terms), default=None)
    def coefficient_of_t(self, e):
        '''The t-free expression multiplying t^e.'''
        e = Fraction(e)
        return LaurentExpr(self.rank, {(a, Fraction(0)): c
                                       for (a, f), c in self.terms.items()
                                       if f == e})
    def shift_t(self, k):
        '''Multiply by t^k.'''
        k = Fraction(k)
        return LaurentExpr(self.rank, {(a, e+k): c
                                       for (a, e), c in self.terms.items()},
                           lattice=lcm(self.lattice, k.denominator))
    def map_coefficients(self, fn):
        return LaurentExpr(self.rank, {k: fn(c) for k, c in self.terms.items()},
                           self.lattice)
    def map_coefficients_with_key(self, fn):
        return LaurentExpr(self.rank,
                           {k: fn(c, _term_label(k)) for k, c in self.terms.items()},
                           self.lattice)
    def at_y(self, y0):
        return self.map_coefficients(lambda c: YRational(c.at(y0)))
    def evaluate_t(self, value=1):
        '''Set t to 1 (the only value that keeps fractional powers exact).'''
        if value != 1:
            raise ValueError('Only t=1 can be substituted into a Laurent class')
        return LaurentExpr(self.rank, {(a, Fraction(0)): c
                                       for (a, _), c in self.terms.items()})
    def substitute_scalar(self, emb):
        '''alpha_j -> alpha_j * t^(-w_j/q) for every j.'''
        if len(emb.weights) != self.rank:
            raise DimensionMismatchError(self.rank, len(emb.weights),
                                         what='torus rank')
        out = {}
        for (a, e), c in self.terms.items():
            key = (a, e - Fraction(emb.scalar_weight(a), emb.q))
            out[key] = out.get(key, ZERO) + c
        return LaurentExpr(self.rank, out, lattice=lcm(self.lattice, abs(emb.q)))
    def clear_lattice(self):
        '''Same expression declared on the integer lattice.'''
        if not self.is_integral_t():
            bad = sorted({e for _, e in self.terms if e.denominator != 1})
            raise FractionalExponentError(
                'Irreducibly fractional t exponents: {}'.format(
                    ', '.join(map(str, bad))))
        return LaurentExpr(self.rank, self.terms, 1)

    def as_expr(self):
        alphas = alpha_symbols(self.rank)
        acc = sympy.Integer(0)
        for (a, e), c in self.terms.items():
            mono = sympy.Integer(1)
            for sym, k in zip(alphas, a):
                mono *= sym**k
            acc += c.as_expr() * mono * T_SYMBOL**sympy.Rational(
                e.numerator, e.denominator)
        return acc

    def _coerce(self, other):
        if isinstance(other, LaurentExpr):
            if other.rank != self.rank:
                raise DimensionMismatchError(self.rank, other.rank,
                                             what='torus rank')
            return other
        return LaurentExpr.constant(YRational(other), self.rank)
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, ZERO) + c
        return LaurentExpr(self.rank, terms, lcm(self.lattice, other.lattice))
    __radd__ = __add__
    def __neg__(self):
        return self.map_coefficients(lambda c: -c)
    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)
    def __rsub__(self, other):
        return (-self) + other
    def __mul__(self, other):
        if not isinstance(other, LaurentExpr):
            try:
                s = YRational(other)
            except TypeError:
                return NotImplemented
            return self.map_coefficients(lambda c: c*s)
        other = self._coerce(other)
        terms = {}
        for (a1, e1), c1 in self.terms.items():
            for (a2, e2), c2 in other.terms.items():
                key = (tuple(x+y for x, y in zip(a1, a2)), e1+e2)
                terms[key] = terms.get(key, ZERO) + c1*c2
        return LaurentExpr(self.rank, terms, lcm(self.lattice, other.lattice))
    __rmul__ = __mul__
    def __pow__(self, exponent):
        if exponent < 0:
            if len(self.terms) != 1:
                raise ValueError('Only monomials have negative powers')
            ((a, e), c), = self.terms.items()
            return LaurentExpr(self.rank,
                               {(tuple(exponent*x for x in a), exponent*e):
                                c**exponent}, self.lattice)
        acc = LaurentExpr.constant(ONE, self.rank)
        base = self
        while exponent:
            if exponent & 1:
                acc = acc * base
            exponent >>= 1
            if exponent:
                base = base * base
        return acc
    def __eq__(self, other):
        if isinstance(other, LaurentExpr):
            return self.rank == other.rank and self.terms == other.terms
        try:
            return self == LaurentExpr.constant(YRational(other), self.rank)
        except (TypeError, ValueError):
            return NotImplemented
    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))
    def __str__(self):
        from .codec import render_laurent
        return render_laurent(self)


def _term_label(key):
    a, e = key
    return 'alpha^{} t^{}'.format(list(a), e)


@dataclasses.dataclass(frozen=True)
class ScalarEmbedding:
    '''A one-parameter subgroup z -> (z^w_1, .., z^w_k) acting on C^(n+1)
    as z^q times the identity.'''
    weights: Tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, 'weights', tuple(int(w) for w in self.weights))
        if not self.q:
            raise ValueError('The scalar exponent q must be nonzero')

    def scalar_weight(self, character):
        return sum(c*w for c, w in zip(character, self.weights))
    def to_json(self):
        return {'weights': list(self.weights), 'q': self.q}


@dataclasses.dataclass(frozen=True)
class TorusAction:
    '''A diagonal action of a rank-k torus on C^(n+1).

    `characters[i]` is the exponent vector of beta_(i+1) in alpha_1..alpha_k.
    '''
    n: int
    rank: int
    characters: Tuple[Tuple[int, ...], ...]
    scalar: Optional[ScalarEmbedding] = None

    def __post_init__(self):
        chars = tuple(tuple(int(c) for c in ch) for ch in self.characters)
        object.__setattr__(self, 'characters', chars)
        if len(chars) != self.n+1:
            raise DimensionMismatchError(self.n+1, len(chars),
                                         what='character count')
        for ch in chars:
            if len(ch) != self.rank:
                raise DimensionMismatchError(self.rank, len(ch),
                                             what='torus rank')
        if self.scalar is not None:
            if len(self.scalar.weights) != self.rank:
                raise DimensionMismatchError(self.rank, len(self.scalar.weights),
                                             what='torus rank')
            for i, ch in enumerate(chars):
                if self.scalar.scalar_weight(ch) != self.scalar.q:
                    raise ValueError(
                        'Character beta_{} has scalar weight {} instead of '
                        'q={}; the action does not contain the scalars'.format(
                            i+1, self.scalar.scalar_weight(ch), self.scalar.q))

    @staticmethod
    def trivial(n):
        '''The rank-0 torus.'''
        return TorusAction(n, 0, ((),) * (n+1))
    @staticmethod
    def diagonal(n):
        '''Rank n+1 with beta_i = alpha_i, containing the scalars with q=1.'''
        chars = tuple(tuple(int(i == j) for j in range(n+1)) for i in range(n+1))
        return TorusAction(n, n+1, chars, ScalarEmbedding((1,)*(n+1), 1))

    def is_trivial(self):
        return all(not any(ch) for ch in self.characters)
    def relation(self, start=0):
        '''prod_{i >= start} (1 - t/beta_i), the class of the origin.'''
        acc = LaurentExpr.constant(ONE, self.rank)
        for ch in self.characters[start:]:
            acc = acc * (1 - LaurentExpr.monomial(tuple(-c for c in ch), 1))
        return acc
    def origin_class(self, gamma=True):
        '''[0] in K_{Gamma x T}(C^(n+1)), or in K_T when gamma is False.'''
        r = self.relation()
        return r if gamma else r.evaluate_t(1)
    def to_json(self):
        from .codec import render_monomial
        out = {
            'n': self.n,
            'rank': self.rank,
            'characters': [render_monomial(ch) or '1' for ch in self.characters],
        }
        if self.scalar is not None:
            out['scalar'] = self.scalar.to_json()
        return out
    @staticmethod
    def from_json(obj):
        from .codec import parse_monomial
        rank = int(obj['rank'])
        chars = tuple(parse_monomial(s, rank) for s in obj['characters'])
        n = int(obj.get('n', len(chars) - 1))
        scalar = obj.get('scalar')
        if scalar is not None:
            scalar = ScalarEmbedding(tuple(scalar['weights']), int(scalar['q']))
        return TorusAction(n, rank, chars, scalar)


@dataclasses.dataclass(frozen=True, eq=False)
class EquivariantClass:
    '''An element of K_T(P^n)[y] in reduced form (t-degree 0..n).'''
    action: TorusAction
    expr: LaurentExpr

    def __post_init__(self):
        if self.expr.rank != self.action.rank:
            raise DimensionMismatchError(self.action.rank, self.expr.rank,
                                         what='torus rank')
        if not self.expr.is_integral_t():
            raise FractionalExponentError(
                'Equivariant classes need integer t exponents')
        if not self.expr.is_zero():
            if self.expr.min_t_degree() < 0 or self.expr.t_degree() > self.action.n:
                raise ValueError(
                    'Not in reduced form: t-degrees must lie in 0..{}'.format(
                        self.action.n))

    @property
    def n(self):
        return self.action.n
    @staticmethod
    def zero(action):
        return EquivariantClass(action, LaurentExpr.zero(action.rank))
    @staticmethod
    def tautological(action):
        '''kappa(t) = [gamma]_T.'''
        return laurent_reduce(LaurentExpr.t_var(action.rank), action)

    def is_zero(self):
        return self.expr.is_zero()
    def at_t_one(self):
        return self.expr.evaluate_t(1)
    def at_y(self, y0):
        return EquivariantClass(self.action, self.expr.at_y(y0))
    def map_coefficients_with_key(self, fn):
        return EquivariantClass(self.action, self.expr.map_coefficients_with_key(fn))
    def to_truncated(self):
        '''The non-equivariant class, available when every character is
        trivial and the coefficients do not involve alpha.'''
        from .ring import TruncatedClass
        if not self.action.is_trivial():
            raise ValueError('The torus acts nontrivially; forget it first')
        coeffs = {}
        for (a, e), c in self.expr.terms.items():
            if any(a):
                raise ValueError('Coefficient involves torus characters')
            coeffs[int(e)] = c
        return TruncatedClass.from_t(coeffs, self.n)
    @staticmethod
    def from_truncated(c, action=None):
        action = TorusAction.trivial(c.n) if action is None else action
        return laurent_reduce(
            LaurentExpr.from_t_coefficients(c.t_coefficients(), action.rank),
            action)

    def _check(self, other):
        if not isinstance(other, EquivariantClass):
            raise TypeError(f'Expected EquivariantClass, got {type(other).__name__}')
        if other.action != self.action:
            raise DimensionMismatchError(self.action, other.action,
                                         what='torus action')
    def __add__(self, other):
        self._check(other)
        return EquivariantClass(self.action, self.expr + other.expr)
    def __sub__(self, other):
        self._check(other)
        return EquivariantClass(self.action, self.expr - other.expr)
    def __neg__(self):
        return EquivariantClass(self.action, -self.expr)
    def __mul__(self, other):
        if isinstance(other, EquivariantClass):
            self._check(other)
            return laurent_reduce(self.expr * other.expr, self.action)
        if isinstance(other, LaurentExpr):
            return laurent_reduce(self.expr * other, self.action)
        return EquivariantClass(self.action, self.expr * YRational(other))
    __rmul__ = __mul__
    def __eq__(self, other):
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        return self.action == other.action and self.expr == other.expr
    def __hash__(self):
        return hash((self.action, self.expr))
    def __str__(self):
        return str(self.expr)


def laurent_divmod(p, action):
    '''Return (quotient, reduced) with p = quotient * relation + reduced.'''
    p = getattr(p, 'expr', p)
    if p.rank != action.rank:
        raise DimensionMismatchError(action.rank, p.rank, what='torus rank')
    if not p.is_integral_t():
        raise FractionalExponentError(
            'Cannot reduce an expression with fractional t exponents: {}'.format(
                p))
    p = p.clear_lattice()
    n = action.n
    rel = action.relation()
    one = LaurentExpr.constant(ONE, action.rank)
    quotient = LaurentExpr.zero(action.rank)

    low = p.min_t_degree()
    if low is not None and low < 0:
        # t^-1 = -S where relation = 1 + t*S
        m = int(-low)
        s = (rel - one).shift_t(-1)
        neg = LaurentExpr(p.rank, {k: c for k, c in p.terms.items() if k[1] < 0})
        q = neg.shift_t(m)
        geometric = LaurentExpr.zero(action.rank)
        for j in range(m):
            geometric = geometric + (one - rel)**j
        quotient = quotient + neg * geometric
        p = (p - neg) + q * (-s)**m

    # inverse of the top coefficient (-1)^(n+1)/prod beta_i
    top_inv = LaurentExpr.monomial(
        tuple(sum(col) for col in zip(*action.characters)), 0, (-1)**(n+1),
        rank=action.rank)
    steps = 0
    while not p.is_zero() and p.t_degree() > n:
        d = int(p.t_degree())
        factor = (p.coefficient_of_t(d) * top_inv).shift_t(d-n-1)
        quotient = quotient + factor
        p = p - factor*rel
        steps += 1
    logger.debug('Reduced modulo the relation of P^%d in %d division steps',
                 n, steps)
    return quotient, EquivariantClass(action, p)

def laurent_reduce(p, action):
    '''The reduced form of p in K_T(P^n)[y].'''
    return laurent_divmod(p, action)[1]
