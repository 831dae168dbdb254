'''K-classes and motivic Chern classes of subvarieties of P^n, and the
genera obtained by pushing them forward to a point.
'''

from fractions import Fraction
from math import comb
import dataclasses
import logging
from typing import Optional

from .errors import (
    DimensionMismatchError, NonSplitBundleError, PoleError, ZeroClassError)
from .ring import TruncatedClass
from .yrational import YRational, ZERO, ONE, Y

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ClassTriple:
    '''The sheaf class [O_X], the pushforward class [X] and mC_0(X).

    `motivic` optionally carries the full motivic Chern class, of which
    `motivic0` is the y=0 slice.
    '''
    sheaf: TruncatedClass
    pushforward: TruncatedClass
    motivic0: TruncatedClass
    motivic: Optional[TruncatedClass] = None
    dim: Optional[int] = None
    smooth: bool = False
    provenance: str = ''

    def __post_init__(self):
        dims = {c.n for c in (self.sheaf, self.pushforward, self.motivic0,
                              self.motivic) if c is not None}
        if len(dims) != 1:
            raise DimensionMismatchError(*sorted(dims))

    @property
    def n(self):
        return self.sheaf.n
    def classes(self):
        return {'sheaf': self.sheaf, 'pushforward': self.pushforward,
                'mc0': self.motivic0}
    def to_json(self):
        out = {
            'n': self.n,
            'sheaf': self.sheaf,
            'pushforward': self.pushforward,
            'mc0': self.motivic0,
            'smooth': self.smooth,
            'provenance': self.provenance,
        }
        if self.motivic is not None:
            out['mc'] = self.motivic
        if self.dim is not None:
            out['dim'] = self.dim
        return out

@dataclasses.dataclass(frozen=True)
class GenusReport:
    chi_y: YRational
    todd: Fraction
    arithmetic_genus: Fraction
    dim: int

    def to_json(self):
        return {
            'chi_y': self.chi_y,
            'todd': self.todd,
            'arithmetic_genus': self.arithmetic_genus,
            'dim': self.dim,
        }


def linear_subspace_class(k, n):
    '''[P^k in P^n] = H^(n-k).'''
    if not 0 <= k <= n:
        raise ValueError(f'Need 0 <= k <= n, got k={k}, n={n}')
    return TruncatedClass.h_power(n-k, n)

def complete_intersection_class(degrees, n):
    '''prod (1 - t^d_i), the class of a complete intersection.'''
    degrees = list(degrees)
    if not degrees:
        raise ValueError('A complete intersection needs at least one degree')
    if len(degrees) > n:
        raise ValueError(
            f'{len(degrees)} equations cut out nothing in P^{n}')
    if any(d < 1 for d in degrees):
        raise ValueError(f'Degrees must be positive: {degrees}')
    acc = TruncatedClass.one(n)
    for d in degrees:
        acc = acc * TruncatedClass.from_t({0: 1, d: -1}, n)
    return acc.convert_basis('H')

def mc_projective_space(n):
    '''mC(P^n) = sum C(n+1,i) (-y)^i (1+y)^(n-i) H^i.'''
    if n < 0:
        raise ValueError(f'Negative dimension: {n}')
    return TruncatedClass(n, tuple(
        comb(n+1, i) * (-Y)**i * (ONE+Y)**(n-i) for i in range(n+1)))

def mc_linear_subspace(k, n):
    return linear_inclusion_pushforward(mc_projective_space(k), k, n)

def split_divisor_mc(chern_roots, ambient_mc):
    '''mC of the transversal zero locus of a split bundle
    E = sum O(d_i): e(E) * lambda_y(E^*)^-1 * ambient_mc.'''
    roots = list(chern_roots)
    for d in roots:
        if isinstance(d, bool) or not isinstance(d, int):
            raise NonSplitBundleError(
                f'Bundle roots must be integer powers of t, got {d!r}; only '
                'sums of line bundles O(d) are supported')
    n = ambient_mc.n
    acc = ambient_mc
    for d in roots:
        euler = TruncatedClass.from_t({0: 1, d: -1}, n)
        lam = TruncatedClass.from_t({0: 1, d: Y}, n)
        acc = acc * euler * lam.inverse()
    return acc.convert_basis('H')

def mc_smooth_hypersurface(d, n):
    '''mC(Z_d in P^n) = (1+yt)^(n+1)/(1+y) * (1-t^d)/(1+yt^d).'''
    if d < 1 or n < 1:
        raise ValueError(f'Need d >= 1 and n >= 1, got d={d}, n={n}')
    return split_divisor_mc([d], mc_projective_space(n))

def pushforward_self_map_p1(d):
    '''f_!1 = d - (d-1)H for a degree-d self map f of P^1.'''
    if d < 1:
        raise ValueError(f'Degree must be positive: {d}')
    return TruncatedClass(1, (YRational(d), YRational(1-d)))

def push_along_self_map_p1(c, d):
    '''f_! of any class on P^1: 1 -> d-(d-1)H and H (a point) -> H.'''
    if c.n != 1:
        raise DimensionMismatchError(c.n, 1)
    q0, q1 = c.coeffs
    return pushforward_self_map_p1(d).scale(q0) + TruncatedClass(1, (ZERO, q1))

def linear_inclusion_pushforward(c, n, N):
    '''Push forward along a linear P^n in P^N: H^j -> H^(j+N-n).'''
    if c.n != n:
        raise DimensionMismatchError(c.n, n)
    if n > N:
        raise ValueError(f'Cannot include P^{n} in P^{N}')
    return TruncatedClass(N, (ZERO,)*(N-n) + c.coeffs)

def union_additive_pushforward(parts):
    parts = list(parts)
    if not parts:
        raise ValueError('Need at least one component')
    dims = {c.n for c in parts}
    if len(dims) > 1:
        raise DimensionMismatchError(*sorted(dims))
    return sum(parts[1:], parts[0]).convert_basis('H')

def motivic_inclusion_exclusion(parts, overlaps=None):
    '''mC of a union from its components and the classes of their
    intersections, keyed by frozensets of component indices (size >= 2).
    Missing intersections are empty.'''
    parts = list(parts)
    acc = union_additive_pushforward(parts)
    for key, c in (overlaps or {}).items():
        key = frozenset(key)
        if len(key) < 2 or not key <= set(range(len(parts))):
            raise ValueError(f'Bad intersection key {sorted(key)}')
        acc = acc + c.scale((-1)**(len(key)+1))
    return acc

def mc0_union_two_linear(k, l, n):
    '''mC_0 of two general linear subspaces of codimensions k and l.'''
    if k <= 0 or l <= 0:
        raise ValueError(f'Codimensions must be positive: k={k}, l={l}')
    h = lambda i: TruncatedClass.h_power(i, n)
    return motivic_inclusion_exclusion([h(k), h(l)],
                                       {frozenset({0, 1}): h(k+l)})

def integral(c):
    '''Push forward to a point: the sum of the H-coefficients.'''
    return sum(c.coeffs[1:], c.coeffs[0])

def genus_report(mc, dim):
    chi_y = integral(mc)
    try:
        todd = chi_y.at(0)
    except PoleError:
        logger.error('chi_y = %s has a pole at y=0', chi_y)
        raise
    return GenusReport(chi_y, todd, (-1)**dim * (todd - 1), dim)

def degree_codim(c):
    for i, q in enumerate(c.coeffs):
        if q:
            return i, q
    raise ZeroClassError('The zero class has no codimension')

def motivic_segre(mc, ambient_mc=None):
    '''ms(X in M) = mC(X in M) / mC(M), with M = P^n by default.'''
    ambient_mc = mc_projective_space(mc.n) if ambient_mc is None else ambient_mc
    return mc * ambient_mc.inverse()


def rational_normal_curve_class(d):
    '''[X_d in P^d] = d H^(d-1) - (d-1) H^d.'''
    return linear_inclusion_pushforward(pushforward_self_map_p1(d), 1, d)

def mc_rational_normal_curve(d):
    return linear_inclusion_pushforward(
        push_along_self_map_p1(mc_projective_space(1), d), 1, d)

def chi_y_plane_curve(d):
    '''Closed form (C(d-1,2) - 1)(y - 1) of chi_y of a smooth plane curve.'''
    return (comb(d-1, 2) - 1) * (Y - 1)

def chi_y_space_surface(d):
    '''Closed form of chi_y of a smooth surface of degree d in P^3:
    chi(O)(1+y)^2 - e*y with chi(O) = 1 + C(d-1,3) and topological Euler
    characteristic e = d^3 - 4d^2 + 6d.'''
    return (1 + comb(d-1, 3)) * (ONE+Y)**2 - (d**3 - 4*d**2 + 6*d) * Y


def _triple_from_mc(mc, sheaf, pushforward, dim, smooth, provenance):
    return ClassTriple(sheaf=sheaf.convert_basis('H'),
                       pushforward=pushforward.convert_basis('H'),
                       motivic0=mc.at_y(0), motivic=mc, dim=dim,
                       smooth=smooth, provenance=provenance)

def _plane_cubics():
    n = 2
    sheaf = complete_intersection_class([3], n)
    point = mc_linear_subspace(0, n)
    line = mc_linear_subspace(1, n)
    conic = mc_smooth_hypersurface(2, n)
    image = linear_inclusion_pushforward(
        push_along_self_map_p1(mc_projective_space(1), 3), 1, n)
    image_class = linear_inclusion_pushforward(pushforward_self_map_p1(3), 1, n)
    line_class = linear_subspace_class(1, n)
    conic_class = complete_intersection_class([2], n)
    pair = lambda i, j: frozenset({i, j})
    rows = [
        ('nodal', image - point, image_class,
         'image of P^1 under a degree-3 map identifying two points'),
        ('cuspidal', image, image_class,
         'bijective image of P^1 under a degree-3 map'),
        ('conic+line',
         motivic_inclusion_exclusion([conic, line], {pair(0, 1): 2*point}),
         union_additive_pushforward([conic_class, line_class]),
         'smooth conic and a line meeting it in two points'),
        ('conic+tangent',
         motivic_inclusion_exclusion([conic, line], {pair(0, 1): point}),
         union_additive_pushforward([conic_class, line_class]),
         'smooth conic and a tangent line'),
        ('three-lines',
         motivic_inclusion_exclusion(
             [line]*3, {pair(0, 1): point, pair(0, 2): point,
                        pair(1, 2): point}),
         union_additive_pushforward([line_class]*3),
         'three lines in general position'),
        ('three-concurrent-lines',
         motivic_inclusion_exclusion(
             [line]*3, {pair(0, 1): point, pair(0, 2): point,
                        pair(1, 2): point, frozenset({0, 1, 2}): point}),
         union_additive_pushforward([line_class]*3),
         'three lines through one point'),
    ]
    return [(name, _triple_from_mc(mc, sheaf, push, 1, False, prov))
            for name, mc, push, prov in rows]

def cubic_catalogue():
    '''The six singular plane cubics with their three K-classes.'''
    return _plane_cubics()

CUBIC_NAMES = ('nodal', 'cuspidal', 'conic+line', 'conic+tangent',
               'three-lines', 'three-concurrent-lines')

def cubic(name):
    for row, triple in cubic_catalogue():
        if row == name:
            return triple
    raise ValueError('Unknown cubic {!r}, expected one of: {}'.format(
        name, ', '.join(CUBIC_NAMES)))


def variety_triple(kind, *params):
    '''ClassTriple of a described variety.

    Descriptors: `linear k n`, `ci d1,..,dk n`, `hypersurface d n`,
    `rnc d`, `cubic <name>`, `union-linear k l n` (codimensions k, l).
    '''
    if kind == 'cubic':
        if len(params) != 1:
            raise ValueError('Usage: cubic <name>')
        return cubic(params[0])
    try:
        if kind == 'linear':
            k, n = map(int, params)
            c = linear_subspace_class(k, n)
            return ClassTriple(c, c, c, mc_linear_subspace(k, n), dim=k,
                               smooth=True, provenance=f'P^{k} in P^{n}')
        if kind in ('ci', 'hypersurface'):
            if kind == 'ci':
                degrees, n = params
                degrees = [int(d) for d in str(degrees).split(',') if d.strip()]
            else:
                d, n = params
                degrees = [int(d)]
            n = int(n)
            c = complete_intersection_class(degrees, n)
            mc = split_divisor_mc(degrees, mc_projective_space(n))
            return ClassTriple(c, c, mc.at_y(0), mc, dim=n-len(degrees),
                               smooth=True, provenance=(
                                   'smooth complete intersection of degrees '
                                   f'{degrees} in P^{n}'))
        if kind == 'rnc':
            d, = map(int, params)
            if d < 1:
                raise ValueError(f'Degree must be positive: {d}')
            c = rational_normal_curve_class(d)
            return ClassTriple(c, c, c, mc_rational_normal_curve(d), dim=1,
                               smooth=True,
                               provenance=f'rational normal curve in P^{d}')
        if kind == 'union-linear':
            k, l, n = map(int, params)
            return union_two_linear_triple(k, l, n)
    except (TypeError, ValueError) as e:
        raise ValueError(f'Invalid parameters for {kind!r}: {e}') from e
    raise ValueError(f'Unknown variety descriptor {kind!r}')

def union_two_linear_triple(k, l, n):
    '''Two general linear subspaces of codimensions k and l in P^n.  The
    sheaf class comes from the K-polynomial of the intersection of two
    coordinate ideals.'''
    from .hilbert import MonomialIdeal, kpoly_from_monomial_ideal, sheaf_class_from_kpoly
    if not (0 < k <= n and 0 < l <= n):
        raise ValueError(f'Need 0 < k, l <= n, got k={k}, l={l}, n={n}')
    first = MonomialIdeal.coordinate(range(k), n+1)
    second = MonomialIdeal.coordinate(range(n+1-l, n+1), n+1)
    sheaf = sheaf_class_from_kpoly(
        kpoly_from_monomial_ideal(first.intersection(second)))
    pushforward = union_additive_pushforward([
        TruncatedClass.h_power(k, n), TruncatedClass.h_power(l, n)])
    parts = [mc_linear_subspace(n-k, n), mc_linear_subspace(n-l, n)]
    overlaps = {}
    if k + l <= n:
        overlaps[frozenset({0, 1})] = mc_linear_subspace(n-k-l, n)
    mc = motivic_inclusion_exclusion(parts, overlaps)
    return ClassTriple(sheaf, pushforward, mc0_union_two_linear(k, l, n), mc,
                       dim=n-min(k, l), smooth=False,
                       provenance=(f'union of general linear subspaces of '
                                   f'codimensions {k} and {l} in P^{n}'))
