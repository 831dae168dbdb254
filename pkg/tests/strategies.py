'''Hypothesis strategies shared by the test modules.'''

from hypothesis import strategies as st

from kcones.laurent import ScalarEmbedding, TorusAction
from kcones.ring import TruncatedClass
from kcones.yrational import YRational

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def y_polynomials(draw, max_degree=2):
    '''A polynomial in y with small integer coefficients.'''
    coeffs = draw(st.lists(small_ints, min_size=1, max_size=max_degree+1))
    return YRational.from_parts(coeffs)

@st.composite
def y_rationals(draw):
    num = draw(y_polynomials())
    den = draw(y_polynomials().filter(lambda p: not p.is_zero()))
    return num / den

@st.composite
def truncated_classes(draw, n=None, coefficients=None):
    n = draw(st.integers(min_value=0, max_value=4)) if n is None else n
    coefficients = small_ints if coefficients is None else coefficients
    coeffs = draw(st.lists(coefficients, min_size=n+1, max_size=n+1))
    return TruncatedClass(n, tuple(coeffs))

@st.composite
def scalar_actions(draw):
    '''A torus action containing the scalars, with beta_i = alpha_1^q * ..'''
    rank = draw(st.integers(min_value=1, max_value=3))
    n = draw(st.integers(min_value=1, max_value=3))
    q = draw(st.integers(min_value=1, max_value=2))
    rest = st.lists(st.integers(min_value=-2, max_value=2),
                    min_size=rank-1, max_size=rank-1)
    chars = tuple((q,) + tuple(draw(rest)) for _ in range(n+1))
    return TorusAction(n, rank, chars,
                       ScalarEmbedding((1,) + (0,)*(rank-1), q))
