'''Equivariant cohomology counterpart of the K-theoretic transfer.

H_T^*(P^n) = Q[a_1..a_k][x] / (prod (b_i - x)), and the class of X in P^n
is obtained from the class of its affine cone by a_j -> a_j - (w_j/q) x.
'''

from math import factorial
import dataclasses
import logging
from typing import Tuple

import sympy
from sympy import QQ, lex, ring

from .codec import parse_expression
from .errors import DimensionMismatchError, ParseError

logger = logging.getLogger(__name__)


def cohomology_ring(rank):
    '''Q[x, a_1..a_k] with x largest in lex order, so that division by
    prod (b_i - x) lowers the x-degree.'''
    names = ','.join(['x'] + [f'a{j+1}' for j in range(rank)])
    return ring(names, QQ, lex)[0]

def _linear_form(R, weight):
    return sum((R.gens[j+1] * int(c) for j, c in enumerate(weight)), R.zero)

def _to_ring(R, cx):
    if isinstance(cx, str):
        cx = parse_expression(cx)
    try:
        return R.from_expr(sympy.sympify(cx))
    except (ValueError, TypeError) as e:
        raise ParseError(f'{cx} is not a polynomial in {R.symbols}') from e


@dataclasses.dataclass(frozen=True, eq=False)
class CohomClass:
    '''A reduced class in H_T^*(P^n) (x-degree at most n).'''
    rank: int
    n: int
    weights: Tuple[Tuple[int, ...], ...]
    poly: object

    def __post_init__(self):
        weights = tuple(tuple(int(c) for c in b) for b in self.weights)
        object.__setattr__(self, 'weights', weights)
        if len(weights) != self.n+1:
            raise DimensionMismatchError(self.n+1, len(weights),
                                         what='weight count')
        if any(len(b) != self.rank for b in weights):
            raise DimensionMismatchError(self.rank, what='torus rank')
        R = cohomology_ring(self.rank)
        object.__setattr__(self, 'poly', self.poly.set_ring(R).rem(
            relation_polynomial(self.rank, weights)))

    @staticmethod
    def parse(text, action):
        '''Read a polynomial in x, a1..a_k for the given TorusAction.'''
        R = cohomology_ring(action.rank)
        return CohomClass(action.rank, action.n, action.characters,
                          _to_ring(R, text))

    @property
    def ring(self):
        return self.poly.ring
    def as_expr(self):
        return self.poly.as_expr()
    def __eq__(self, other):
        if not isinstance(other, CohomClass):
            return NotImplemented
        return (self.weights == other.weights and self.rank == other.rank
                and self.poly == other.poly)
    def __hash__(self):
        return hash((self.weights, self.poly))
    def __str__(self):
        return sympy.sstr(self.as_expr())
    def to_json(self):
        return {'rank': self.rank, 'n': self.n,
                'weights': [sympy.sstr(_linear_form(self.ring, b).as_expr())
                            for b in self.weights],
                'class': str(self)}


def relation_polynomial(rank, weights):
    '''prod (b_i - x).'''
    R = cohomology_ring(rank)
    x = R.gens[0]
    acc = R.one
    for b in weights:
        acc *= _linear_form(R, b) - x
    return acc

def coho_affine_to_projective(cx, weights, q, action_weights):
    '''[X]_T = [C X]_T with a_j -> a_j - (w_j/q) x, reduced.'''
    action_weights = tuple(tuple(b) for b in action_weights)
    rank = len(weights)
    if not q:
        raise ValueError('The scalar exponent q must be nonzero')
    R = cohomology_ring(rank)
    x = R.gens[0]
    p = _to_ring(R, cx)
    subs = [(R.gens[j+1], R.gens[j+1] - x * QQ(int(w), int(q)))
            for j, w in enumerate(weights)]
    if subs:
        p = p.compose(subs)
    return CohomClass(rank, len(action_weights) - 1, action_weights, p)

def coho_affine_to_projective_action(cx, action):
    '''Same, reading weights, q and b_i from a TorusAction.'''
    if action.scalar is None:
        raise ValueError('The action needs a scalar embedding')
    return coho_affine_to_projective(cx, action.scalar.weights,
                                     action.scalar.q, action.characters)

def coho_projective_to_affine(x_class):
    '''Set x = 0 in the reduced form.'''
    R = x_class.ring
    return x_class.poly.compose(R.gens[0], R.zero).as_expr()

def leading_cohomology_term(expr, degree):
    '''Degree-`degree` part of the Chern character of a y-free Laurent
    class, where alpha_j = e^(a_j) and t = e^x.  For a hyperplane class
    1 - t/beta this is b - x in degree 1.'''
    R = cohomology_ring(expr.rank)
    x = R.gens[0]
    acc = R.zero
    for (alpha, e), c in expr.terms.items():
        if not c.is_constant():
            raise ValueError('The Chern character needs y-free coefficients')
        f = c.to_fraction()
        exponent = _linear_form(R, alpha) + x * QQ(e.numerator, e.denominator)
        power = exponent**degree if degree else R.one
        acc += power * QQ(f.numerator, f.denominator * factorial(degree))
    return acc.as_expr()
