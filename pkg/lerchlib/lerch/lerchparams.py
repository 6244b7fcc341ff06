from fractions import Fraction
from mpmath import mpf
from lerchlib.util.errors import DomainError
from lerchlib.lerch.rationalparam import RationalParam

def _coerce_param(value):
    if isinstance(value, RationalParam):
        return value

    if isinstance(value, (int, Fraction)):
        return RationalParam.from_fraction(value)

    if isinstance(value, str):
        return RationalParam.parse(value)

    value = mpf(value)
    if not 0 < value <= 1:
        raise DomainError(f"parameter {value} is not in (0, 1]")

    return value


class LerchParams:
    '''
    The parameter pair (lambda, alpha) of L(lambda, alpha, s). Each entry is
    a RationalParam or, for the convergent-series path only, a real mpf in
    (0, 1].

    Arguments:
    'lambda_' -- the twist lambda.
    'alpha' -- the shift alpha; defaults to lambda_.
    '''

    def __init__(self, lambda_, alpha=None):
        self._lambda = _coerce_param(lambda_)
        self._alpha = _coerce_param(lambda_ if alpha is None else alpha)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LerchParams):
            return value

        if isinstance(value, (tuple, list)):
            return cls(*value)

        return cls(value)

    @property
    def lambda_(self):
        '''Gets lambda.'''
        return self._lambda

    @property
    def alpha(self):
        '''Gets alpha.'''
        return self._alpha

    @property
    def is_rational(self):
        '''Gets whether both parameters are exact rationals.'''
        return isinstance(self._lambda, RationalParam) and isinstance(self._alpha, RationalParam)

    @property
    def equal_params(self):
        '''Gets whether lambda equals alpha.'''
        if self.is_rational:
            return self._lambda == self._alpha

        return self.lambda_value() == self.alpha_value()

    def lambda_value(self):
        '''Gets lambda as an mpf at the current precision.'''
        return _param_value(self._lambda)

    def alpha_value(self):
        '''Gets alpha as an mpf at the current precision.'''
        return _param_value(self._alpha)

    def product(self):
        '''Gets alpha * lambda as a float, for counting main terms.'''
        return float(self.lambda_value() * self.alpha_value())

    def __eq__(self, other):
        if not isinstance(other, LerchParams):
            return NotImplemented

        return self._lambda == other.lambda_ and self._alpha == other.alpha

    def __hash__(self):
        return hash((self._lambda, self._alpha))

    def __str__(self):
        return f"({self._lambda}, {self._alpha})"

    def __repr__(self):
        return f"LerchParams({self._lambda!r}, {self._alpha!r})"


def _param_value(param):
    if isinstance(param, RationalParam):
        return param.to_mpf()

    return mpf(param)
