from aenum import Enum
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from lerchlib.util import config
from lerchlib.util.errors import DomainError

class Method(Enum):
                # Label
    Muller      = "muller"
    Contour     = "contour"


class ZeroRecord:
    '''
    A refined, certified zero rho = beta + i gamma of L(lambda, alpha, s).

    Arguments:
    'beta' -- the real part.
    'gamma_t' -- the imaginary part, gamma > 0.
    'residual' -- |L(rho)| at the refined point.
    'radius_bound' -- radius of a disc around rho holding no other zero.
    'method' -- the Method that located the zero.
    'precision' -- decimal digits the zero was computed at.
    'alpha' -- optional alpha of the function; when given, the zero must lie
        in the strip -1 <= beta < 1 + alpha.
    '''

    def __init__(self, beta, gamma_t, residual, radius_bound, method=Method.Muller, precision=None,
                 alpha=None):
        precision = int(precision or config.default_digits)
        with mp.workdps(precision):
            self._beta = mpf(beta)
            self._gamma = mpf(gamma_t)
            self._residual = mpf(residual)
            if alpha is not None and not -1 <= self._beta < 1 + mpf(alpha):
                raise DomainError(f"zero real part {mp.nstr(self._beta, 15)} lies outside "
                                  f"[-1, 1 + {mp.nstr(mpf(alpha), 15)})")

        if self._gamma <= 0:
            raise DomainError(f"zero ordinate must be positive, got {self._gamma}")

        if radius_bound <= 0:
            raise DomainError(f"isolation radius must be positive, got {radius_bound}")

        self._radius_bound = float(radius_bound)
        self._method = method
        self._precision = precision

    @property
    def beta(self):
        '''Gets the real part of the zero.'''
        return self._beta

    @property
    def gamma_t(self):
        '''Gets the imaginary part of the zero.'''
        return self._gamma

    @property
    def residual(self):
        '''Gets |L| at the zero.'''
        return self._residual

    @property
    def radius_bound(self):
        '''Gets the isolation radius.'''
        return self._radius_bound

    @property
    def method(self):
        return self._method

    @property
    def precision(self):
        return self._precision

    @property
    def rho(self):
        '''Gets the zero as an mpc.'''
        with mp.workdps(self._precision):
            return mpc(self._beta, self._gamma)

    @property
    def deviation(self):
        '''Gets beta - 1/2.'''
        with mp.workdps(self._precision):
            return self._beta - mpf(1) / 2

    def __repr__(self):
        return (f"ZeroRecord({mp.nstr(self._beta, 15)}, {mp.nstr(self._gamma, 15)}, "
                f"residual={mp.nstr(self._residual, 3)}, radius_bound={self._radius_bound:.3g}, "
                f"method={self._method.value})")
