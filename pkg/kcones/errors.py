'''Exceptions raised by kcones.

Every error subclasses a built-in exception so that code catching
`ValueError` or `ArithmeticError` keeps working.
'''


class KConesError(Exception):
    '''Marker base class for all kcones errors.'''

class DimensionMismatchError(KConesError, ValueError):
    def __init__(self, *dims, what='class'):
        self.dims = dims
        super().__init__('Ambient dimension mismatch between {}s: {}'.format(
            what, ', '.join(map(str, dims))))

class InexactDivisionError(KConesError, ArithmeticError):
    '''A coefficient is not divisible by the requested polynomial in y.'''
    def __init__(self, coeff, divisor, where=None):
        self.coeff = coeff
        self.divisor = divisor
        self.where = where
        loc = '' if where is None else f' at {where}'
        super().__init__(
            f'Coefficient {coeff}{loc} is not divisible by {divisor}')

class FractionalExponentError(KConesError, ValueError):
    pass

class PoleError(KConesError, ZeroDivisionError):
    pass

class ZeroClassError(KConesError, ValueError):
    pass

class NonSplitBundleError(KConesError, TypeError):
    pass

class ResourceCapError(KConesError, RuntimeError):
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(
            f'{count} monomial generators exceed the cap of {cap}. '
            'Raise it with the K_CONE_GEN_CAP environment variable.')

class ParseError(KConesError, ValueError):
    pass
