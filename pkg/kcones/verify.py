'''Replay of the worked examples and identities as a verification suite.

Every case computes an expected and a computed value and compares them
exactly.  Case ids are stable dotted names, for example
`table1.nodal.sheaf` or `chi_y.pn.3`.  Randomized cases draw their
fixtures from `Config.verify_seed`, so the suite is deterministic.
'''

from concurrent.futures import ThreadPoolExecutor
from fnmatch import fnmatchcase
from functools import partial
from math import comb
import dataclasses
import logging
import time
from typing import Callable

import numpy as np

from .cohomology import (
    CohomClass, coho_affine_to_projective_action, cohomology_ring,
    leading_cohomology_term)
from .config import resolve
from .cones import (
    projective_cone_mc, projective_cone_mc0, projective_cone_pushforward,
    projective_cone_sheaf)
from .equivariant import (
    AffineEquivariantClass, affine_to_projective_mc, equiv_linear_subspace,
    kirwan, projective_to_affine_forget, projective_to_affine_full,
    projective_to_affine_scalar)
from .hilbert import (
    KPolynomial, MonomialIdeal, count_standard_monomials,
    hilbert_series_coefficients, kpoly_from_monomial_ideal,
    sheaf_class_from_kpoly)
from .laurent import (
    EquivariantClass, LaurentExpr, ScalarEmbedding, TorusAction)
from .projective import (
    CUBIC_NAMES, chi_y_plane_curve, chi_y_space_surface,
    complete_intersection_class, cubic, degree_codim, genus_report, integral,
    linear_inclusion_pushforward, mc0_union_two_linear, mc_linear_subspace,
    mc_projective_space, mc_rational_normal_curve, mc_smooth_hypersurface,
    motivic_segre, union_two_linear_triple, variety_triple)
from .ring import TruncatedClass, divide_exact_y
from .yrational import YRational, ONE, Y, ONE_PLUS_Y

logger = logging.getLogger(__name__)

ROUNDTRIP_CASES = 200
HILBERT_CASES = 50
GENERIC_POINTS = '3*(1-t)^2 - 2*(1-t)^3'
COLLINEAR_POINTS = '3*(1-t)^2 - (t+2)*(1-t)^3'


@dataclasses.dataclass(frozen=True)
class VerifyOutcome:
    case_id: str
    expected: str
    computed: str
    passed: bool
    note: str = ''

    def to_json(self):
        return {'id': self.case_id, 'expected': self.expected,
                'computed': self.computed, 'passed': self.passed,
                'note': self.note}

@dataclasses.dataclass(frozen=True)
class Case:
    '''`run` returns the pair (expected, computed).'''
    case_id: str
    run: Callable
    note: str = ''


def _h(*coeffs, n):
    return TruncatedClass.from_h(coeffs, n)

def _render(value):
    if isinstance(value, (tuple, list)):
        return '[' + '; '.join(_render(v) for v in value) + ']'
    return str(value)


# Sheaf class, pushforward class and mC_0 of each singular plane cubic
CUBIC_TABLE = {
    'nodal': ((0, 3, -3), (0, 3, -2), (0, 3, -3)),
    'cuspidal': ((0, 3, -3), (0, 3, -2), (0, 3, -2)),
    'conic+line': ((0, 3, -3), (0, 3, -1), (0, 3, -3)),
    'conic+tangent': ((0, 3, -3), (0, 3, -1), (0, 3, -2)),
    'three-lines': ((0, 3, -3), (0, 3, 0), (0, 3, -3)),
    'three-concurrent-lines': ((0, 3, -3), (0, 3, 0), (0, 3, -2)),
}
CUBIC_KINDS = ('sheaf', 'pushforward', 'mc0')

def _cubic_entry(name, kind):
    expected = _h(*CUBIC_TABLE[name][CUBIC_KINDS.index(kind)], n=2)
    return expected, cubic(name).classes()[kind]

def _cubic_cases():
    for name in CUBIC_NAMES:
        for kind in CUBIC_KINDS:
            yield Case(f'table1.{name}.{kind}', partial(_cubic_entry, name, kind))


def _chi_y_pn(n):
    expected = sum(((-Y)**i for i in range(1, n+1)), ONE)
    return expected, integral(mc_projective_space(n))

def _todd_pn(n):
    return YRational(1), YRational(genus_report(mc_projective_space(n), n).todd)

def _mc_pn(n):
    lam = TruncatedClass.from_t([comb(n+1, j) * Y**j for j in range(n+2)], n)
    mc = divide_exact_y(lam, ONE_PLUS_Y, strict=True)
    return mc.convert_basis('H'), mc_projective_space(n)

def _projective_space_cases():
    for n in range(11):
        yield Case(f'chi_y.pn.{n}', partial(_chi_y_pn, n))
    for n in range(9):
        yield Case(f'todd.pn.{n}', partial(_todd_pn, n))
        yield Case(f'mc.pn.{n}', partial(_mc_pn, n),
                   note='against (1+yt)^(n+1)/(1+y)')


def _hypersurface_genus(d, n):
    report = genus_report(mc_smooth_hypersurface(d, n), n-1)
    return YRational(comb(d-1, n)), YRational(report.arithmetic_genus)

def _rnc_class(d):
    expected = _h(*([0]*(d-1) + [d, 1-d]), n=d)
    return expected, variety_triple('rnc', d).pushforward

def _rnc_todd(d):
    return YRational(1), YRational(genus_report(mc_rational_normal_curve(d), 1).todd)

def _genus_cases():
    for n in range(2, 6):
        for d in range(1, 9):
            yield Case(f'genus.hypersurface.n{n}.d{d}',
                       partial(_hypersurface_genus, d, n))
    for d in range(2, 9):
        yield Case(f'rnc.d{d}.class', partial(_rnc_class, d))
        yield Case(f'rnc.d{d}.todd', partial(_rnc_todd, d))


def _two_subspace_ideal():
    return MonomialIdeal.parse('x0, x1', 4).product(MonomialIdeal.parse('x2, x3', 4))

def _two_subspaces_kpoly():
    return (KPolynomial(3, {0: 1, 2: -4, 3: 4, 4: -1}),
            kpoly_from_monomial_ideal(_two_subspace_ideal()))

def _two_subspaces_sheaf():
    return (_h(0, 0, 2, n=3),
            sheaf_class_from_kpoly(kpoly_from_monomial_ideal(_two_subspace_ideal())))

def _two_subspaces_mc0():
    return (sheaf_class_from_kpoly(kpoly_from_monomial_ideal(_two_subspace_ideal())),
            mc0_union_two_linear(2, 2, 3))

def _two_subspaces_triple():
    return _h(0, 0, 2, n=3), union_two_linear_triple(2, 2, 3).sheaf

def _two_subspace_cases():
    yield Case('two-subspaces.kpoly', _two_subspaces_kpoly)
    yield Case('two-subspaces.sheaf', _two_subspaces_sheaf)
    yield Case('two-subspaces.mc0', _two_subspaces_mc0,
               note='inclusion-exclusion against the sheaf class')
    yield Case('two-subspaces.triple', _two_subspaces_triple)


def _points_series(text, expected):
    k = KPolynomial.parse(text, 2)
    return list(expected), hilbert_series_coefficients(k, len(expected)-1)

def _points_classes():
    generic = sheaf_class_from_kpoly(KPolynomial.parse(GENERIC_POINTS, 2))
    collinear = sheaf_class_from_kpoly(KPolynomial.parse(COLLINEAR_POINTS, 2))
    return (_h(0, 0, 3, n=2), _h(0, 0, 3, n=2)), (generic, collinear)

def _points_kpolys():
    generic = KPolynomial.parse(GENERIC_POINTS, 2)
    collinear = KPolynomial.parse(COLLINEAR_POINTS, 2)
    return 'distinct', 'distinct' if generic != collinear else 'equal'

def _points_degree():
    c = sheaf_class_from_kpoly(KPolynomial.parse(GENERIC_POINTS, 2))
    return (2, YRational(3)), degree_codim(c)

def _points_ideal(ideal, text):
    return (KPolynomial.parse(text, 2),
            kpoly_from_monomial_ideal(MonomialIdeal.parse(ideal, 3)))

def _hilbert_example(ideal, n, J, series):
    k = kpoly_from_monomial_ideal(MonomialIdeal.parse(ideal, n+1))
    return list(series), hilbert_series_coefficients(k, J)

def _hyperplane_example():
    k = kpoly_from_monomial_ideal(MonomialIdeal.parse('x0', 3))
    return (KPolynomial(2, {0: 1, 1: -1}), _h(0, 1, n=2)), (k, sheaf_class_from_kpoly(k))

def _hilbert_example_cases():
    yield Case('three-points.series.generic',
               partial(_points_series, GENERIC_POINTS, (1, 3, 3, 3, 3, 3)))
    yield Case('three-points.series.collinear',
               partial(_points_series, COLLINEAR_POINTS, (1, 2, 3, 3, 3, 3)))
    yield Case('three-points.classes', _points_classes)
    yield Case('three-points.kpoly', _points_kpolys)
    yield Case('three-points.degree', _points_degree)
    yield Case('three-points.ideal.generic',
               partial(_points_ideal, 'x0*x1, x0*x2, x1*x2', GENERIC_POINTS),
               note='the three coordinate points')
    yield Case('three-points.ideal.collinear',
               partial(_points_ideal, 'x2, x0^2*x1', COLLINEAR_POINTS),
               note='a length-3 scheme on a line')
    yield Case('hilbert.empty-ideal.series',
               partial(_hilbert_example, '', 2, 4, (1, 3, 6, 10, 15)))
    yield Case('hilbert.hyperplane', _hyperplane_example)


def _random_ideal(rng):
    num_vars = int(rng.integers(1, 6))
    count = int(rng.integers(0, 7))
    gens = rng.integers(0, 4, size=(count, num_vars))
    return MonomialIdeal(num_vars, tuple(map(tuple, gens.tolist())))

def _hilbert_bruteforce(ideal, J=12):
    k = kpoly_from_monomial_ideal(ideal)
    return ([count_standard_monomials(ideal, j) for j in range(J+1)],
            hilbert_series_coefficients(k, J))

def _hilbert_random_cases(config):
    rng = np.random.default_rng(config.verify_seed)
    for i in range(HILBERT_CASES):
        ideal = _random_ideal(rng)
        yield Case(f'hilbert.bruteforce.{i:02d}', partial(_hilbert_bruteforce, ideal),
                   note=f'({ideal}) in {ideal.num_vars} variables')


def _cone_quartic_mc():
    cone = projective_cone_mc(mc_smooth_hypersurface(4, 2), smooth=True)
    return _h(0, 4, -6, 3, n=3), cone.cone_class.at_y(0)

def _cone_quartic_mc0():
    mc0 = complete_intersection_class([4], 2)
    return _h(0, 4, -6, 3, n=3), projective_cone_mc0(mc0, -2)

def _cone_quartic_sheaf():
    return _h(0, 4, -6, 4, n=3), projective_cone_sheaf(KPolynomial.parse('1-t^4', 2))[1]

def _cone_quartic_pushforward():
    return (_h(0, 4, -6, n=3),
            projective_cone_pushforward(complete_intersection_class([4], 2)))

def _cone_classes(d):
    motivic = projective_cone_mc(mc_smooth_hypersurface(d, 2),
                                 smooth=True).cone_class.at_y(0)
    sheaf = projective_cone_sheaf(KPolynomial(2, {0: 1, d: -1}))[1]
    push = projective_cone_pushforward(complete_intersection_class([d], 2))
    return motivic, sheaf, push

def _cone_quartic_integrals():
    return ((YRational(1), YRational(2), YRational(-2)),
            tuple(integral(c) for c in _cone_classes(4)))

def _cone_divergence(d):
    motivic, sheaf, push = _cone_classes(d)
    if motivic == sheaf:
        computed = 'motivic == sheaf'
    elif len({integral(c) for c in (motivic, sheaf, push)}) == 3:
        computed = 'pairwise distinct'
    else:
        computed = 'partially distinct'
    return 'motivic == sheaf' if d <= 3 else 'pairwise distinct', computed

def _cone_example_cases():
    yield Case('cone.quartic.mc', _cone_quartic_mc)
    yield Case('cone.quartic.mc0', _cone_quartic_mc0)
    yield Case('cone.quartic.sheaf', _cone_quartic_sheaf)
    yield Case('cone.quartic.pushforward', _cone_quartic_pushforward)
    yield Case('cone.quartic.integrals', _cone_quartic_integrals)
    for d in range(1, 9):
        yield Case(f'cone.divergence.d{d}', partial(_cone_divergence, d))


def _recursion_bases():
    for name in CUBIC_NAMES:
        yield f'cubic-{name}', cubic(name)
    for d in range(1, 5):
        yield f'hypersurface-d{d}', variety_triple('hypersurface', d, 2)
    yield 'line', variety_triple('linear', 1, 2)
    yield 'point', variety_triple('linear', 0, 2)
    yield 'rnc-d3', variety_triple('rnc', 3)

def _recursion_integral(triple):
    cone = projective_cone_mc(triple.motivic, smooth=triple.smooth)
    return ONE - Y*integral(triple.motivic), integral(cone.cone_class)

def _recursion_segre(triple):
    cone = projective_cone_mc(triple.motivic, smooth=triple.smooth)
    return motivic_segre(triple.motivic), cone.restricted_segre()

def _recursion_y0(triple):
    mc = triple.motivic
    cone = projective_cone_mc(mc, smooth=triple.smooth)
    return (projective_cone_mc0(mc.at_y(0), integral(mc).at(0)),
            cone.cone_class.at_y(0))

def _recursion_cases():
    for name, triple in _recursion_bases():
        yield Case(f'cone.recursion.{name}.integral', partial(_recursion_integral, triple))
        yield Case(f'cone.recursion.{name}.segre', partial(_recursion_segre, triple),
                   note='hyperplane pullback of the Segre class of the cone')
        yield Case(f'cone.recursion.{name}.y0', partial(_recursion_y0, triple))


def _chi_y_linear(k):
    return integral(mc_projective_space(k))

def _pk_identity(k, n):
    N = n + 1
    pushed = linear_inclusion_pushforward(mc_projective_space(k), k, n).rehome(N)
    lhs = pushed.scale(ONE_PLUS_Y) - TruncatedClass.h_power(N, N).scale(1 - (-Y)**(k+1))
    H = TruncatedClass.h_power(1, N)
    t = 1 - H
    rhs = H**(n-k) * (1 + t.scale(Y))**(k+1) - H**N
    return rhs, lhs

def _scalar_transfer(k, n):
    t = LaurentExpr.t_var()
    M = (1 - t)**(n-k) * (1 + t*Y)**(k+1)
    R = (1 - t)**(n+1)
    computed = projective_to_affine_scalar(mc_linear_subspace(k, n), _chi_y_linear(k))
    return M - R, computed.expr

def _linear_subspace_full(k, n):
    M, R, mcT = equiv_linear_subspace(k, TorusAction.diagonal(n))
    return M - R, projective_to_affine_full(mcT, _chi_y_linear(k))

def _kirwan_origin():
    action = TorusAction.diagonal(2)
    origin = AffineEquivariantClass(action, action.relation(), gamma=True)
    return EquivariantClass.zero(action), kirwan(origin)

def _kirwan_t():
    action = TorusAction.diagonal(2)
    t = AffineEquivariantClass(action, LaurentExpr.t_var(action.rank), gamma=True)
    return LaurentExpr.t_var(action.rank), kirwan(t).expr

def _equivariant_cases():
    for n in range(1, 6):
        for k in range(n+1):
            yield Case(f'equivariant.pk-identity.n{n}.k{k}', partial(_pk_identity, k, n),
                       note='unreduced, compared in degrees up to n+1')
            yield Case(f'transfer.scalar.n{n}.k{k}', partial(_scalar_transfer, k, n))
    for n in range(1, 5):
        for k in range(n+1):
            yield Case(f'equivariant.linear-subspace.n{n}.k{k}',
                       partial(_linear_subspace_full, k, n))
    yield Case('equivariant.kirwan.origin', _kirwan_origin)
    yield Case('equivariant.kirwan.t', _kirwan_t)


def _random_action(rng):
    rank = int(rng.integers(1, 4))
    n = int(rng.integers(1, 4))
    q = int(rng.integers(1, 3))
    chars = tuple((q,) + tuple(int(v) for v in rng.integers(-2, 3, size=rank-1))
                  for _ in range(n+1))
    weights = (1,) + (0,)*(rank-1)
    return TorusAction(n, rank, chars, ScalarEmbedding(weights, q))

def _roundtrip(action, k):
    _, _, mcT = equiv_linear_subspace(k, action)
    chi = _chi_y_linear(k)
    through_gamma = affine_to_projective_mc(projective_to_affine_full(mcT, chi))
    through_torus = affine_to_projective_mc(projective_to_affine_forget(mcT, chi))
    return (mcT, mcT), (through_gamma, through_torus)

def _roundtrip_cases(config):
    rng = np.random.default_rng(config.verify_seed + 1)
    for i in range(ROUNDTRIP_CASES):
        action = _random_action(rng)
        k = int(rng.integers(0, action.n+1))
        chars = ', '.join(map(str, action.characters))
        yield Case(f'transfer.roundtrip.{i:03d}', partial(_roundtrip, action, k),
                   note=f'P^{k} in P^{action.n}, q={action.scalar.q}, '
                        f'characters {chars}')


def _chi_y_closed(oracle, n, d):
    return oracle(d), integral(mc_smooth_hypersurface(d, n))

def _plane_curve_alternate():
    '''(C(d-1,2) + 1)(y - 1) disagrees with the expansion for every d.'''
    agree = [d for d in range(1, 7)
             if integral(mc_smooth_hypersurface(d, 2)) == (comb(d-1, 2) + 1) * (Y - 1)]
    logger.info('Alternate plane-curve closed form agrees for degrees %s', agree)
    return [], agree

def _chi_y_cases():
    for d in range(1, 7):
        yield Case(f'chi_y.plane-curve.d{d}',
                   partial(_chi_y_closed, chi_y_plane_curve, 2, d))
        yield Case(f'chi_y.space-surface.d{d}',
                   partial(_chi_y_closed, chi_y_space_surface, 3, d))
    yield Case('chi_y.plane-curve.alternate-constant', _plane_curve_alternate,
               note='the closed form with constant +1 matches no degree')


def _coho_linear(k, n):
    action = TorusAction.diagonal(n)
    R = cohomology_ring(action.rank)
    x = R.gens[0]
    expected = R.one
    for i in range(k+1, n+1):
        expected *= R.gens[i+1] - x
    cx = '*'.join(f'a{i+1}' for i in range(k+1, n+1)) or '1'
    return (CohomClass(action.rank, n, action.characters, expected),
            coho_affine_to_projective_action(cx, action))

def _coho_leading(k, n):
    action = TorusAction.diagonal(n)
    R = cohomology_ring(action.rank)
    x = R.gens[0]
    expected = R.one
    for i in range(k+1, n+1):
        expected *= R.gens[i+1] - x
    return expected.as_expr(), leading_cohomology_term(action.relation(start=k+1), n-k)

def _cohomology_cases():
    for n in range(1, 4):
        for k in range(n+1):
            yield Case(f'cohomology.linear-subspace.n{n}.k{k}',
                       partial(_coho_linear, k, n))
            yield Case(f'cohomology.leading-term.n{n}.k{k}',
                       partial(_coho_leading, k, n))


def all_cases(config=None):
    '''Every registered case, sorted by id.'''
    config = resolve(config)
    groups = (_cubic_cases(), _projective_space_cases(), _genus_cases(),
              _two_subspace_cases(), _hilbert_example_cases(),
              _hilbert_random_cases(config), _cone_example_cases(),
              _recursion_cases(), _equivariant_cases(),
              _roundtrip_cases(config), _chi_y_cases(), _cohomology_cases())
    cases = {}
    for group in groups:
        for case in group:
            if case.case_id in cases:
                raise ValueError(f'Duplicate verification case id {case.case_id!r}')
            cases[case.case_id] = case
    return [cases[k] for k in sorted(cases)]

def matches(case_id, pattern):
    '''Glob match; a pattern also selects every id it is a dotted prefix
    of.  None selects everything and the empty pattern nothing.'''
    if pattern is None:
        return True
    if not pattern:
        return False
    return fnmatchcase(case_id, pattern) or case_id.startswith(pattern + '.')

def select(cases, pattern=None):
    return [c for c in cases if matches(c.case_id, pattern)]

def run_case(case):
    start = time.perf_counter()
    try:
        expected, computed = case.run()
        passed = bool(expected == computed)
        outcome = VerifyOutcome(case.case_id, _render(expected),
                                _render(computed), passed, case.note)
    except Exception as e:
        logger.debug('Case %s raised', case.case_id, exc_info=True)
        outcome = VerifyOutcome(case.case_id, '', f'{type(e).__name__}: {e}',
                                False, case.note)
    logger.debug('Case %s took %.3fs', case.case_id, time.perf_counter() - start)
    return outcome

def run_verification(pattern=None, config=None):
    '''Run the selected cases, returning outcomes in case-id order.'''
    config = resolve(config)
    cases = select(all_cases(config), pattern)
    if config.verify_jobs > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=config.verify_jobs) as pool:
            outcomes = list(pool.map(run_case, cases))
    else:
        outcomes = [run_case(c) for c in cases]
    failed = sum(not o.passed for o in outcomes)
    if failed:
        logger.info('%d of %d verification cases failed', failed, len(outcomes))
    return outcomes
