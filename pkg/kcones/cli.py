'''Command line front end.

    kcones class cubic nodal
    kcones cone --mc0 class hypersurface 4 2
    kcones hilbert "x0*x3,x0*x2,x1*x3,x1*x2" --n 3
    kcones equivariant linear-subspace --k 1 --n 2
    kcones verify "table1.*"

Every command prints text by default and canonical JSON with `--json`.
'''

import argparse
import json
import logging
import sys

from . import codec
from .cohomology import (
    CohomClass, coho_affine_to_projective_action, coho_projective_to_affine)
from .config import Config
from .cones import (
    csm_projective_cone, projective_cone_mc, projective_cone_mc0,
    projective_cone_pushforward, projective_cone_sheaf)
from .equivariant import (
    AffineEquivariantClass, affine_to_projective_mc, chi_y_of,
    equiv_linear_subspace, kirwan, projective_to_affine_forget,
    projective_to_affine_full)
from .errors import KConesError, ParseError, ResourceCapError
from .hilbert import (
    KPolynomial, MonomialIdeal, hilbert_polynomial_from_class,
    hilbert_series_coefficients, kpoly_from_monomial_ideal,
    sheaf_class_from_kpoly)
from .laurent import LaurentExpr, TorusAction, laurent_reduce
from .projective import degree_codim, genus_report, integral, variety_triple
from .ring import TruncatedClass
from .verify import run_verification
from .yrational import YRational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE_CAP = 3

EQUIVARIANT_COMMANDS = (
    'kirwan', 'to-projective', 'to-affine', 'to-affine-forget',
    'coho-to-projective', 'coho-to-affine', 'linear-subspace')


def _format(value, config):
    '''Text rendering of one value, in LaTeX when requested.'''
    expr = getattr(value, 'expr', value)
    if isinstance(value, TruncatedClass):
        if config.latex:
            return codec.latex_class(value, 'H')
        return '{}    [t-basis: {}]'.format(codec.render_class(value, 'H'),
                                           codec.render_class(value, 't'))
    if isinstance(value, YRational):
        return value.latex() if config.latex else str(value)
    if config.latex and hasattr(expr, 'as_expr'):
        return codec.latex_expr(expr)
    return str(expr if isinstance(expr, LaurentExpr) else value)

def _emit(args, config, result, lines):
    '''Print `result` as JSON, or the (label, value) `lines` as text.'''
    if args.json:
        print(codec.dumps(result))
        return
    for label, value in lines:
        print(f'{label}: {_format(value, config)}')


def _triple_from_words(words):
    if not words:
        raise ParseError('Missing variety descriptor')
    return variety_triple(words[0], *words[1:])

def cmd_class(args, config):
    triple = _triple_from_words(args.descriptor)
    codim, degree = degree_codim(triple.pushforward)
    result = {'triple': triple,
              'degree_codim': {'codim': codim, 'degree': degree}}
    lines = [('sheaf', triple.sheaf), ('pushforward', triple.pushforward),
             ('mc0', triple.motivic0)]
    if triple.motivic is not None:
        lines.append(('mc', triple.motivic))
    lines.append(('codim/degree', f'{codim} / {degree}'))
    if triple.motivic is not None and triple.dim is not None:
        report = genus_report(triple.motivic, triple.dim)
        result['genus'] = report
        lines += [('chi_y', report.chi_y), ('todd', report.todd),
                  ('arithmetic genus', report.arithmetic_genus)]
    _emit(args, config, result, lines)
    return EXIT_OK


def _cone_base(args, key):
    if args.class_json is not None:
        try:
            return codec.class_from_json(json.loads(args.class_json)), None
        except json.JSONDecodeError as e:
            raise ParseError(f'Malformed class JSON: {e}') from e
    words = list(args.source)
    if words and words[0] == 'class':
        words = words[1:]
    triple = _triple_from_words(words)
    return getattr(triple, key), triple

def cmd_cone(args, config):
    if args.csm is not None:
        cone = csm_projective_cone(codec.parse_int_list(args.csm))
        _emit(args, config, {'cone': cone}, [('cone', cone)])
        return EXIT_OK
    if args.sheaf:
        if args.kpoly is None or args.n is None:
            raise ParseError('--sheaf needs --kpoly and --n')
        base, cone = projective_cone_sheaf(KPolynomial.parse(args.kpoly, args.n))
        _emit(args, config, {'base': base, 'cone': cone},
              [('base', base), ('cone', cone)])
        return EXIT_OK
    if args.mc:
        mc, triple = _cone_base(args, 'motivic')
        if mc is None:
            raise ParseError('No motivic Chern class is known for this variety')
        smooth = args.smooth or (triple is not None and triple.smooth)
        result = projective_cone_mc(mc, smooth=smooth)
        _emit(args, config, result,
              [('base', result.base_class), ('cone', result.cone_class),
               ('chi_y(base)', result.chi_y_base),
               ('chi_y(cone)', integral(result.cone_class))])
        return EXIT_OK
    if args.mc0:
        mc0, triple = _cone_base(args, 'motivic0')
        if args.todd is not None:
            todd = codec.parse_fraction(args.todd)
        elif triple is not None and triple.motivic is not None:
            todd = integral(triple.motivic).at(0)
        else:
            raise ParseError('--mc0 with --class-json needs --todd')
        cone = projective_cone_mc0(mc0, todd)
        _emit(args, config, {'base': mc0, 'cone': cone, 'todd': todd},
              [('base', mc0), ('cone', cone)])
        return EXIT_OK
    base, _ = _cone_base(args, 'pushforward')
    cone = projective_cone_pushforward(base)
    _emit(args, config, {'base': base, 'cone': cone},
          [('base', base), ('cone', cone)])
    return EXIT_OK


def cmd_hilbert(args, config):
    ideal = MonomialIdeal.parse(args.ideal, args.n + 1)
    kpoly = kpoly_from_monomial_ideal(ideal, config)
    series = hilbert_series_coefficients(kpoly, args.J)
    sheaf = sheaf_class_from_kpoly(kpoly)
    hp = hilbert_polynomial_from_class(sheaf)
    result = {'ideal': str(ideal), 'kpoly': kpoly, 'series': series,
              'class': sheaf, 'hilbert_polynomial': hp}
    _emit(args, config, result, [
        ('K-polynomial', kpoly), ('series', ', '.join(map(str, series))),
        ('class', sheaf), ('Hilbert polynomial', hp),
        ('binomial form', hp.render_binomial())])
    return EXIT_OK


def _action(args):
    if args.action is not None:
        try:
            obj = json.loads(args.action)
            return TorusAction.from_json(obj)
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ParseError(f'Malformed action JSON: {e}') from e
    if args.n is None:
        raise ParseError('Give --action or --n for the diagonal action')
    return TorusAction.diagonal(args.n)

def _need_poly(args):
    if args.poly is None:
        raise ParseError(f'{args.operation} needs --poly')
    return args.poly

def _chi_y(args):
    return None if args.chi_y is None else YRational(args.chi_y)

def cmd_equivariant(args, config):
    action = _action(args)
    op = args.operation
    if op == 'linear-subspace':
        if args.k is None:
            raise ParseError('linear-subspace needs --k')
        M, R, mcT = equiv_linear_subspace(args.k, action)
        full = projective_to_affine_full(mcT)
        result = {'action': action, 'M': M, 'R': R, 'mc': mcT,
                  'affine': full, 'chi_y': chi_y_of(mcT)}
        lines = [('M', M), ('R', R), ('mc_T', mcT), ('affine', full)]
    elif op == 'kirwan':
        c = AffineEquivariantClass(
            action, codec.parse_laurent(_need_poly(args), action.rank), gamma=True)
        out = kirwan(c)
        result = {'action': action, 'class': out}
        lines = [('kirwan', out)]
    elif op == 'to-projective':
        expr = codec.parse_laurent(_need_poly(args), action.rank)
        c = AffineEquivariantClass(action, expr, gamma=not args.torus_only)
        out = affine_to_projective_mc(c)
        result = {'action': action, 'class': out}
        lines = [('mc_T', out)]
    elif op in ('to-affine', 'to-affine-forget'):
        mcT = laurent_reduce(
            codec.parse_laurent(_need_poly(args), action.rank), action)
        transfer = (projective_to_affine_full if op == 'to-affine'
                    else projective_to_affine_forget)
        out = transfer(mcT, _chi_y(args))
        result = {'action': action, 'class': out}
        lines = [('affine', out)]
    elif op == 'coho-to-projective':
        out = coho_affine_to_projective_action(_need_poly(args), action)
        result = {'action': action, 'class': out}
        lines = [('projective', out)]
    elif op == 'coho-to-affine':
        out = coho_projective_to_affine(CohomClass.parse(_need_poly(args), action))
        result = {'action': action, 'class': str(out)}
        lines = [('affine', out)]
    else:
        raise ParseError(f'Unknown equivariant operation {op!r}')
    if not args.json:
        lines.insert(0, ('action', codec.dumps(action)))
    _emit(args, config, result, lines)
    return EXIT_OK


def cmd_verify(args, config):
    outcomes = run_verification(args.filter, config)
    failed = [o for o in outcomes if not o.passed]
    if args.json:
        print(codec.dumps({'outcomes': outcomes,
                           'passed': len(outcomes) - len(failed),
                           'failed': len(failed)}))
    else:
        for o in outcomes:
            if o.passed:
                print(f'PASS {o.case_id}')
            else:
                print(f'FAIL {o.case_id}: expected {o.expected}, '
                      f'computed {o.computed}')
        print(f'{len(outcomes) - len(failed)} passed, {len(failed)} failed')
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='kcones',
        description='K-classes of subvarieties of projective space and '
                    'of their cones.')
    parser.add_argument('--json', action='store_true',
                        help='print canonical JSON')
    parser.add_argument('--latex', action='store_true',
                        help='render classes as LaTeX')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('class', help='the three K-classes of a variety')
    p.add_argument('descriptor', nargs='+',
                   help='linear k n | ci d1,..,dk n | hypersurface d n | '
                        'rnc d | cubic <name> | union-linear k l n')
    p.set_defaults(func=cmd_class)

    p = sub.add_parser('cone', help='classes of the projective cone')
    kind = p.add_mutually_exclusive_group(required=True)
    for flag in ('mc', 'mc0', 'pushforward', 'sheaf'):
        kind.add_argument(f'--{flag}', action='store_true')
    kind.add_argument('--csm', metavar='COEFFS',
                      help='CSM coefficients such as "[0,1]"')
    p.add_argument('source', nargs='*', help='class <descriptor>')
    p.add_argument('--class-json', help='base class as JSON')
    p.add_argument('--kpoly', help='K-polynomial for --sheaf')
    p.add_argument('--n', type=int)
    p.add_argument('--todd', help='Todd genus of the base for --mc0')
    p.add_argument('--smooth', action='store_true',
                   help='certify that the base is smooth')
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser('hilbert', help='Hilbert data of a monomial ideal')
    p.add_argument('ideal', help='generators such as "x0*x3, x1^2"')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--J', type=int, default=10)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser('equivariant', help='torus-equivariant transfers')
    p.add_argument('operation', choices=EQUIVARIANT_COMMANDS)
    p.add_argument('--action', help='TorusAction as JSON')
    p.add_argument('--poly')
    p.add_argument('--k', type=int)
    p.add_argument('--n', type=int)
    p.add_argument('--chi-y', dest='chi_y')
    p.add_argument('--torus-only', action='store_true',
                   help='the input of to-projective carries no scalar factor')
    p.set_defaults(func=cmd_equivariant)

    p = sub.add_parser('verify', help='replay the worked examples')
    p.add_argument('filter', nargs='?', default=None,
                   help='case id glob or dotted prefix')
    p.add_argument('--jobs', type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO)
    try:
        overrides = {'latex': args.latex}
        if args.command == 'verify':
            overrides['verify_jobs'] = args.jobs
        config = Config.from_env(**overrides)
        return args.func(args, config)
    except ResourceCapError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except (KConesError, ValueError, ArithmeticError) as e:
        logger.debug('Command failed', exc_info=True)
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE
