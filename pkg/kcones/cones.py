'''Classes of projective cones.

For X in P^n the projective cone over X lives in P^(n+1).  The motivic
recursion q^_i = (1+y) q_i - y q_(i-1), q^_(n+1) = 1 - y q_n - (1+y) chi_y(X)
is applied to any class; smoothness of the base is recorded, not checked.
'''

from fractions import Fraction
import dataclasses
import logging

from .projective import integral, motivic_segre
from .ring import TruncatedClass
from .yrational import YRational, ZERO, ONE, Y

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ConeResult:
    base_class: TruncatedClass
    cone_class: TruncatedClass
    chi_y_base: YRational
    smooth_certified: bool = False

    def __post_init__(self):
        if self.cone_class.n != self.base_class.n + 1:
            raise ValueError('The cone lives one dimension up from its base')

    def restricted_segre(self):
        '''j^* of the motivic Segre class of the cone, as a class on P^n.'''
        return hyperplane_restriction(motivic_segre(self.cone_class))
    def to_json(self):
        return {
            'base': self.base_class,
            'cone': self.cone_class,
            'chi_y_base': self.chi_y_base,
            'chi_y_cone': integral(self.cone_class),
            'smooth_certified': self.smooth_certified,
        }


def projective_cone_mc(mcX, smooth=False):
    '''mC of the projective cone over X from mC(X in P^n).'''
    n = mcX.n
    q = mcX.coeffs
    chi = integral(mcX)
    if not smooth:
        logger.info('Cone over a base not certified smooth; applying the '
                    'motivic recursion as for constructible sets')
    coeffs = [(ONE+Y)*q[i] - Y*(q[i-1] if i else ZERO) for i in range(n+1)]
    coeffs.append(ONE - Y*q[n] - (ONE+Y)*chi)
    return ConeResult(mcX.convert_basis('H'), TruncatedClass(n+1, tuple(coeffs)),
                      chi, smooth_certified=bool(smooth))

def projective_cone_mc0(mc0X, toddX):
    '''The y=0 slice: same coefficients plus (1 - td(X)) H^(n+1).'''
    todd = Fraction(toddX)
    return TruncatedClass(mc0X.n+1, mc0X.coeffs + (YRational(1 - todd),))

def projective_cone_pushforward(classX):
    return classX.convert_basis('H').rehome(classX.n+1)

def projective_cone_sheaf(kpoly, n=None):
    '''Sheaf classes of X and of its cone, both read off the same
    K-polynomial expanded exactly in powers of H.'''
    n = kpoly.n if n is None else n
    expansion = kpoly.h_expansion()
    return (TruncatedClass.from_h(expansion, n),
            TruncatedClass.from_h(expansion, n+1))

def csm_projective_cone(csmX):
    '''CSM cone recursion q^_i = q_i + q_(i-1), q^_(n+1) = q_n + 1.'''
    q = [int(v) for v in csmX]
    if not q:
        raise ValueError('Need at least one coefficient')
    out = [q[i] + (q[i-1] if i else 0) for i in range(len(q))]
    out.append(q[-1] + 1)
    return out

def hyperplane_restriction(c):
    '''Pull back along P^n in P^(n+1), which sends t to t.'''
    if c.n < 1:
        raise ValueError('Cannot restrict a class on P^0 to a hyperplane')
    return c.convert_basis('H').rehome(c.n-1)
