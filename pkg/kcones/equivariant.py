'''Torus-equivariant classes of affine cones and of projective varieties,
the Kirwan map, and the transfers between them.

For a torus action on C^(n+1) containing the scalars, the motivic class of
X in P^n and that of its punctured affine cone C_0 X determine each other:

    mC_T(X) = sub(mC_T(C_0 X)) / (1+y),   alpha_j -> alpha_j t^(-w_j/q)
    mC_(Gamma x T)(C_0 X) = (1+y) (mC_T(X) - chi_y(X) [0])

where Gamma is the scalar circle and [0] = prod (1 - t/beta_i).
'''

import dataclasses
import logging

from .errors import DimensionMismatchError
from .laurent import (
    EquivariantClass, LaurentExpr, TorusAction, laurent_reduce)
from .projective import integral
from .ring import TruncatedClass, divide_exact_y
from .yrational import YRational, ZERO, ONE, Y, ONE_PLUS_Y

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class AffineEquivariantClass:
    '''A class in K_T(C^(n+1))[y], or in K_(Gamma x T)(C^(n+1))[y] when
    `gamma` is set (then t is the character of Gamma).  No relation
    applies.'''
    action: TorusAction
    expr: LaurentExpr
    gamma: bool = True

    def __post_init__(self):
        if self.expr.rank != self.action.rank:
            raise DimensionMismatchError(self.action.rank, self.expr.rank,
                                         what='torus rank')
        if not self.gamma and self.expr.has_t():
            raise ValueError('A T-equivariant class cannot involve t')

    @property
    def n(self):
        return self.action.n
    def is_zero(self):
        return self.expr.is_zero()
    def forget_gamma(self):
        return forget_gamma(self)
    def map_coefficients_with_key(self, fn):
        return dataclasses.replace(self,
                                   expr=self.expr.map_coefficients_with_key(fn))
    def _check(self, other):
        if not isinstance(other, AffineEquivariantClass):
            raise TypeError(
                f'Expected AffineEquivariantClass, got {type(other).__name__}')
        if other.action != self.action or other.gamma != self.gamma:
            raise DimensionMismatchError(self.action, other.action,
                                         what='equivariance setting')
    def __add__(self, other):
        self._check(other)
        return dataclasses.replace(self, expr=self.expr + other.expr)
    def __sub__(self, other):
        self._check(other)
        return dataclasses.replace(self, expr=self.expr - other.expr)
    def __neg__(self):
        return dataclasses.replace(self, expr=-self.expr)
    def __mul__(self, other):
        if isinstance(other, AffineEquivariantClass):
            self._check(other)
            return dataclasses.replace(self, expr=self.expr * other.expr)
        return dataclasses.replace(self, expr=self.expr * other)
    __rmul__ = __mul__
    def __eq__(self, other):
        if not isinstance(other, AffineEquivariantClass):
            return NotImplemented
        return (self.action == other.action and self.gamma == other.gamma
                and self.expr == other.expr)
    def __hash__(self):
        return hash((self.action, self.gamma, self.expr))
    def __str__(self):
        return str(self.expr)
    def to_json(self):
        return {'action': self.action.to_json(), 'gamma': self.gamma,
                'class': self.expr}


@dataclasses.dataclass(frozen=True, eq=False)
class AffineSegreClass:
    '''ms(C_0 X in C^(n+1)) = numerator / mC(C^(n+1)).  The ambient class is
    prod (1 + y/beta_i), or prod (1 + y t/beta_i) in the Gamma x T case.'''
    numerator: AffineEquivariantClass

    def ambient(self):
        return ambient_affine_mc(self.numerator.action, self.numerator.gamma)

@dataclasses.dataclass(frozen=True, eq=False)
class ProjectiveSegreClass:
    '''ms_T(X in P^n) = numerator / ambient with ambient the reduced form of
    prod (1 + y t/beta_i) = (1+y) mC_T(P^n).'''
    numerator: EquivariantClass
    ambient: EquivariantClass

    def motivic_chern(self):
        '''mC_T(X) = ms_T(X) mC_T(P^n) = numerator / (1+y).'''
        return divide_exact_y(self.numerator, ONE_PLUS_Y, strict=True)
    def expand(self):
        '''The Segre class in K(P^n)[y], for the trivial torus.'''
        return self.numerator.to_truncated() * self.ambient.to_truncated().inverse()
    def __eq__(self, other):
        if not isinstance(other, ProjectiveSegreClass):
            return NotImplemented
        return self.numerator * other.ambient == other.numerator * self.ambient
    def __hash__(self):
        return hash(self.numerator.action)
    def to_json(self):
        return {'numerator': self.numerator, 'ambient': self.ambient}


def ambient_affine_mc(action, gamma=True):
    '''mC of C^(n+1): prod (1 + y t/beta_i), or prod (1 + y/beta_i).'''
    t = 1 if gamma else 0
    acc = LaurentExpr.constant(ONE, action.rank)
    for ch in action.characters:
        acc = acc * (1 + LaurentExpr.monomial(tuple(-c for c in ch), t, Y))
    return acc

def forget_gamma(c):
    '''Restrict a Gamma x T class to T (t -> 1).'''
    if not c.gamma:
        return c
    return AffineEquivariantClass(c.action, c.expr.evaluate_t(1), gamma=False)

def affine_motivic_segre(mc0):
    return AffineSegreClass(mc0)

def kirwan(c):
    '''kappa: t -> [gamma]_T, then reduce modulo prod (1 - t/beta_i).'''
    return laurent_reduce(c.expr, c.action)

def equiv_linear_subspace(k, action):
    '''M, R and mC_T of the coordinate subspace P^k spanned by the first
    k+1 coordinates.

    M = prod_(i<=k) (1 + y t/beta_i) prod_(i>k) (1 - t/beta_i) is mC of
    C^(k+1) in C^(n+1), R = [0], M - R is mC of
    C^(k+1) minus the origin, and (1+y) mC_T(P^k) = M - (-y)^(k+1) R.
    '''
    n = action.n
    if not 0 <= k <= n:
        raise ValueError(f'Need 0 <= k <= n, got k={k}, n={n}')
    M = LaurentExpr.constant(ONE, action.rank)
    for i, ch in enumerate(action.characters):
        inv = LaurentExpr.monomial(tuple(-c for c in ch), 1)
        M = M * (1 + inv*Y if i <= k else 1 - inv)
    R = action.relation()
    reduced = laurent_reduce(M - R * (-Y)**(k+1), action)
    mcT = divide_exact_y(reduced, ONE_PLUS_Y, strict=True)
    return (AffineEquivariantClass(action, M, True),
            AffineEquivariantClass(action, R, True), mcT)

def _embedding(c, emb):
    emb = c.action.scalar if emb is None else emb
    if emb is None:
        raise ValueError('A T-equivariant input needs a scalar embedding')
    for i, ch in enumerate(c.action.characters):
        if emb.scalar_weight(ch) != emb.q:
            raise ValueError(
                f'beta_{i+1} does not have scalar weight q={emb.q} under '
                f'weights {list(emb.weights)}')
    return emb

def _substitute(c, emb):
    '''Substitute alpha_j -> alpha_j t^(-w_j/q) for a T-only class; a class
    that already carries Gamma is used as is.'''
    if c.gamma:
        return c.expr
    emb = _embedding(c, emb)
    sub = c.expr.substitute_scalar(emb)
    logger.debug('Substituted %d terms with lattice level %d',
                 len(sub.terms), sub.lattice)
    return sub.clear_lattice()

def affine_to_projective_segre(ms0, emb=None):
    '''ms_T(X in P^n) = sub(ms_T(C_0 X in C^(n+1))).

    A plain AffineEquivariantClass is read as the numerator over the
    implied ambient class.  The result keeps numerator and ambient as
    reduced EquivariantClass values.
    '''
    if isinstance(ms0, AffineEquivariantClass):
        ms0 = affine_motivic_segre(ms0)
    elif not isinstance(ms0, AffineSegreClass):
        raise TypeError(f'Expected an affine class, got {type(ms0).__name__}')
    num = ms0.numerator
    action = num.action
    ambient = AffineEquivariantClass(action, ambient_affine_mc(action, num.gamma),
                                     num.gamma)
    return ProjectiveSegreClass(
        laurent_reduce(_substitute(num, emb), action),
        laurent_reduce(_substitute(ambient, emb), action))

def affine_to_projective_mc(mc0, emb=None):
    '''mC_T(X) = sub(mC_T(C_0 X)) / (1+y), reduced.'''
    reduced = laurent_reduce(_substitute(mc0, emb), mc0.action)
    return divide_exact_y(reduced, ONE_PLUS_Y, strict=True)

def forget_torus(c):
    '''The image in K(P^n)[y] of a reduced class: every alpha -> 1.'''
    coeffs = {}
    for (_, e), q in c.expr.terms.items():
        coeffs[int(e)] = coeffs.get(int(e), ZERO) + q
    return TruncatedClass.from_t(coeffs, c.n).convert_basis('H')

def chi_y_of(mcT):
    '''chi_y(X) from mC_T(X); rigidity makes it the non-equivariant
    integral.'''
    return integral(forget_torus(mcT))

def projective_to_affine_full(mcT, chi_y=None):
    '''(1+y)(mC_T(X) - chi_y(X) [0]_(Gamma x T)), unreduced.'''
    chi_y = chi_y_of(mcT) if chi_y is None else YRational(chi_y)
    action = mcT.action
    expr = (mcT.expr - action.relation() * chi_y) * ONE_PLUS_Y
    return AffineEquivariantClass(action, expr, gamma=True)

def projective_to_affine_scalar(mc, chi_y=None):
    '''(1+y)(mC(X) - chi_y(X) (1-t)^(n+1)) as a Gamma-class.'''
    chi_y = integral(mc) if chi_y is None else chi_y
    action = TorusAction.trivial(mc.n)
    expr = LaurentExpr.from_t_coefficients(mc.t_coefficients())
    expr = (expr - action.relation() * YRational(chi_y)) * ONE_PLUS_Y
    return AffineEquivariantClass(action, expr, gamma=True)

def projective_to_affine_forget(mcT, chi_y=None):
    '''(1+y)(mC_T(X)|_(t=1) - chi_y(X) [0]_T), a T-only class.'''
    chi_y = chi_y_of(mcT) if chi_y is None else chi_y
    action = mcT.action
    expr = (mcT.at_t_one() - action.origin_class(gamma=False)
            * YRational(chi_y)) * ONE_PLUS_Y
    return AffineEquivariantClass(action, expr, gamma=False)
