'''Parsing, text/LaTeX rendering and canonical JSON for kcones values.'''

from fractions import Fraction
from math import lcm
import json
import re

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor, parse_expr, standard_transformations)

from .errors import ParseError
from .yrational import YRational, Y_SYMBOL

TRANSFORMATIONS = standard_transformations + (convert_xor,)
ALPHA_NAME = re.compile(r'^a([1-9][0-9]*)$')


def parse_expression(text):
    '''Parse user text such as `(1+y*t/a1)^2` into a sympy expression.'''
    if not isinstance(text, str):
        raise ParseError(f'Expected a string, got {type(text).__name__}')
    text = text.strip().replace('−', '-')
    if not text:
        raise ParseError('Empty expression')
    try:
        return parse_expr(text, transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise ParseError(f'Could not parse {text!r}: {e}') from e

def _alpha_index(sym, rank):
    m = ALPHA_NAME.match(sym.name)
    if not m or int(m.group(1)) > rank:
        raise ParseError(
            f'Unknown variable {sym.name!r} for a rank-{rank} torus')
    return int(m.group(1)) - 1

def parse_laurent(text, rank, allow_t=True):
    '''Parse a Laurent polynomial in a1..a_rank and t with coefficients
    rational in y.'''
    from .laurent import LaurentExpr, T_SYMBOL, alpha_symbols
    expr = parse_expression(text) if isinstance(text, str) else sympy.sympify(text)
    gens = (T_SYMBOL,) + alpha_symbols(rank)
    for sym in expr.free_symbols:
        if sym == Y_SYMBOL or sym == T_SYMBOL:
            continue
        _alpha_index(sym, rank)
    if not allow_t and T_SYMBOL in expr.free_symbols:
        raise ParseError('The variable t is not allowed here')
    terms = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, mono = term.as_independent(*gens, as_Add=False)
        alpha = [0] * rank
        t_exp = Fraction(0)
        for base, exp in mono.as_powers_dict().items():
            if base == 1:
                continue
            if not (isinstance(base, sympy.Symbol) and exp.is_Rational):
                raise ParseError(f'{term} is not a Laurent monomial')
            if base == T_SYMBOL:
                t_exp += Fraction(int(exp.p), int(exp.q))
            else:
                if not exp.is_Integer:
                    raise ParseError(f'Fractional power of {base} in {term}')
                alpha[_alpha_index(base, rank)] += int(exp)
        key = (tuple(alpha), t_exp)
        try:
            c = YRational(coeff)
        except (TypeError, ValueError) as e:
            raise ParseError(f'Coefficient {coeff} is not rational in y') from e
        terms[key] = terms.get(key, YRational(0)) + c
    lattice = lcm(1, *(e.denominator for _, e in terms))
    return LaurentExpr(rank, terms, lattice)

def parse_t_polynomial(text):
    '''Parse a Laurent polynomial in t; returns {int exponent: YRational}.'''
    expr = parse_laurent(text, 0)
    out = {}
    for (_, e), c in expr.terms.items():
        if e.denominator != 1:
            raise ParseError(f'Fractional power t^{e} in {text!r}')
        out[int(e)] = c
    return out

def parse_monomial(text, rank):
    '''Parse a character such as `a1^2*a2^-1` into its exponent vector.'''
    if isinstance(text, (list, tuple)):
        if len(text) != rank:
            raise ParseError(f'Character {text} has the wrong length')
        return tuple(int(a) for a in text)
    expr = parse_laurent(str(text), rank, allow_t=False)
    if len(expr.terms) != 1:
        raise ParseError(f'{text!r} is not a single character')
    ((alpha, _), c), = expr.terms.items()
    if c != 1:
        raise ParseError(f'Character {text!r} must have coefficient 1')
    return alpha

def parse_fraction(text):
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f'Expected a rational number, got {text!r}') from e

def parse_int_list(text):
    '''Parse `[0,1]`, `0,1` or `2,3` into a list of ints.'''
    try:
        obj = json.loads(text) if text.strip().startswith('[') else [
            int(s) for s in text.split(',') if s.strip()]
        return [int(v) for v in obj]
    except (ValueError, TypeError) as e:
        raise ParseError(f'Expected a list of integers, got {text!r}') from e


def _factor(q, mono, mul='*'):
    '''Render q*mono as one signed term.'''
    if not mono:
        return str(q)
    if q == 1:
        return mono
    if q == -1:
        return '-' + mono
    if q.is_integral_polynomial() and q.needs_parens():
        return f'({q}){mul}{mono}'
    return f'{q}{mul}{mono}'

def _join(parts):
    if not parts:
        return '0'
    text = ' + '.join(parts)
    return text.replace('+ -', '- ')

def render_class(c, basis=None):
    '''Ascending powers of H (or t) with explicit `^` and `*`.'''
    basis = c.basis if basis is None else basis
    coeffs = c.h_coefficients() if basis == 'H' else c.t_coefficients()
    parts = []
    for i, q in enumerate(coeffs):
        if q:
            mono = '' if i == 0 else basis if i == 1 else f'{basis}^{i}'
            parts.append(_factor(q, mono))
    return _join(parts)

def render_monomial(alpha, t_exp=0):
    parts = []
    for j, k in enumerate(alpha):
        if k == 1:
            parts.append(f'a{j+1}')
        elif k:
            parts.append(f'a{j+1}^{k}')
    t_exp = Fraction(t_exp)
    if t_exp == 1:
        parts.append('t')
    elif t_exp.denominator != 1:
        parts.append(f't^({t_exp})')
    elif t_exp:
        parts.append(f't^{t_exp}')
    return '*'.join(parts)

def _laurent_order(key):
    alpha, e = key
    return (e, alpha)

def render_laurent(expr):
    parts = [_factor(c, render_monomial(a, e))
             for (a, e), c in sorted(expr.terms.items(),
                                     key=lambda kv: _laurent_order(kv[0]))]
    return _join(parts)


def latex_class(c, basis=None):
    basis = c.basis if basis is None else basis
    coeffs = c.h_coefficients() if basis == 'H' else c.t_coefficients()
    parts = []
    for i, q in enumerate(coeffs):
        if not q:
            continue
        mono = '' if i == 0 else basis if i == 1 else f'{basis}^{{{i}}}'
        body = sympy.latex(q.as_expr())
        if not mono:
            parts.append(body)
        elif q == 1:
            parts.append(mono)
        elif q == -1:
            parts.append('- ' + mono)
        elif q.needs_parens():
            parts.append(f'\\left({body}\\right) {mono}')
        else:
            parts.append(f'{body} {mono}')
    return ' + '.join(parts).replace('+ - ', '- ') if parts else '0'

def latex_expr(value):
    return sympy.latex(value.as_expr())


def class_to_json(c):
    return {
        'n': c.n,
        'basis': c.basis,
        'coeffs': [q.to_json() for q in c.coefficients],
    }

def class_from_json(obj):
    from .ring import TruncatedClass
    try:
        n = int(obj['n'])
        basis = obj.get('basis', 'H')
        coeffs = [YRational.from_json(q) if isinstance(q, dict) else YRational(q)
                  for q in obj['coeffs']]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f'Malformed class JSON: {e}') from e
    if len(coeffs) != n+1:
        raise ParseError(f'Class at n={n} needs {n+1} coefficients')
    if basis == 'H':
        return TruncatedClass(n, tuple(coeffs))
    if basis == 't':
        return TruncatedClass.from_t(coeffs, n)
    raise ParseError(f'Unknown basis {basis!r}')

def laurent_to_json(expr):
    terms = []
    for (a, e), c in sorted(expr.terms.items(),
                            key=lambda kv: _laurent_order(kv[0])):
        exps = {f'a{j+1}': k for j, k in enumerate(a)}
        exps['t'] = str(e)
        terms.append({'exponents': exps, 'coeff': c.to_json()})
    return {'rank': expr.rank, 'lattice': expr.lattice, 'terms': terms}

def to_jsonable(obj):
    '''Canonical JSON-ready structure of any kcones value.'''
    from .ring import TruncatedClass
    from .laurent import LaurentExpr, EquivariantClass
    if isinstance(obj, TruncatedClass):
        return class_to_json(obj)
    if isinstance(obj, LaurentExpr):
        return laurent_to_json(obj)
    if isinstance(obj, EquivariantClass):
        return {'action': obj.action.to_json(), 'class': laurent_to_json(obj.expr)}
    if isinstance(obj, YRational):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, 'to_json'):
        return to_jsonable(obj.to_json())
    raise TypeError(f'Cannot encode {type(obj).__name__} as JSON')

def dumps(obj):
    '''The one JSON serialization used by library and command line.'''
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(',', ':'))
