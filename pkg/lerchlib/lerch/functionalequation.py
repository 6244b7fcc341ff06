from mpmath import conj
from mpmath import exp
from mpmath import expjpi
from mpmath import log
from mpmath import pi
from lerchlib.util.errors import DomainError
from lerchlib.kernel.gamma import gamma_mp
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_mp
from lerchlib.lerch.evaluation import unit_root
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.lerch.rationalparam import RationalParam

class FunctionalSplit:
    '''
    The decomposition conj(L(lambda, lambda, 1 - conj s)) = G L(lambda, lambda, s) + P.

    Arguments:
    'g' -- the multiplier G(lambda, s) as HPComplex.
    'p' -- the additive term P(lambda, s) as HPComplex.
    '''

    def __init__(self, g, p):
        self._g = g
        self._p = p

    @property
    def g(self):
        '''Gets G(lambda, s).'''
        return self._g

    @property
    def p(self):
        '''Gets P(lambda, s).'''
        return self._p

    def apply(self, value):
        '''Gets G * value + P for a value of L(lambda, lambda, s).'''
        return self._g * value + self._p

    def __repr__(self):
        return f"FunctionalSplit(g={self._g!r}, p={self._p!r})"


def _gamma_factor(s, digits):
    # (2 pi)^-s Gamma(s)
    return exp(-s * log(2 * pi)) * gamma_mp(s, digits)

def _rational_pair(params):
    params = LerchParams.coerce(params)
    if not params.is_rational:
        raise DomainError(f"the functional equation needs rational parameters, got {params}")

    return params

def functional_equation_rhs_mp(params, s, digits):
    '''
    The right-hand side of

        L(lambda, alpha, 1 - s) = (2 pi)^-s Gamma(s) [
            e^(pi i s / 2 - 2 pi i alpha lambda) L(1 - alpha, lambda, s)
          + e^(-pi i s / 2 + 2 pi i alpha (1 - {lambda})) L(alpha, 1 - {lambda}, s) ]

    at the current mpmath precision.
    '''
    lam = params.lambda_
    alpha = params.alpha
    lam_frac = lam.fraction
    alpha_frac = alpha.fraction
    rest = 1 - lam.fractional_part
    first = lerch_mp(LerchParams(RationalParam.wrapped(1 - alpha_frac), lam), s, digits)[0]
    second = lerch_mp(LerchParams(alpha, RationalParam.from_fraction(rest)), s, digits)[0]
    bracket = (expjpi(s / 2) * unit_root(-alpha_frac * lam_frac) * first
               + expjpi(-s / 2) * unit_root(alpha_frac * rest) * second)
    return _gamma_factor(s, digits) * bracket

def functional_equation_rhs(params, s, policy=None):
    '''
    Evaluates the right-hand side of the functional equation, which equals
    L(lambda, alpha, 1 - s), from values of L at s.
    '''
    params = _rational_pair(params)
    policy = policy or PrecisionPolicy.default()
    s = HPComplex.coerce(s, policy.working_digits)
    with policy.context():
        return HPComplex.from_mpc(functional_equation_rhs_mp(params, s.value, policy.working_digits),
                                  policy.working_digits)

def functional_equation_residual(params, s, policy=None):
    '''|rhs(s) - L(lambda, alpha, 1 - s)| as an mpf.'''
    params = _rational_pair(params)
    policy = policy or PrecisionPolicy.default()
    s = HPComplex.coerce(s, policy.working_digits)
    with policy.context():
        z = s.value
        rhs = functional_equation_rhs_mp(params, z, policy.working_digits)
        lhs = lerch_mp(params, 1 - z, policy.working_digits)[0]
        return abs(rhs - lhs)

def functional_split_mp(lam, s, digits):
    '''G and P of the split form as mpc values at the current mpmath precision.'''
    lam_frac = lam.fraction
    complement = 1 - lam_frac
    factor = _gamma_factor(s, digits)
    g = factor * expjpi(-s / 2) * unit_root(lam_frac * lam_frac)
    partner = LerchParams(RationalParam.wrapped(complement), RationalParam.from_fraction(1 - lam.fractional_part))
    p = factor * expjpi(s / 2) * unit_root(-complement * lam_frac) * lerch_mp(partner, s, digits)[0]
    return g, p

def functional_split(lambda_, s, policy=None):
    '''
    Splits the functional equation for lambda = alpha as

        conj(L(lambda, lambda, 1 - conj s)) = G(lambda, s) L(lambda, lambda, s) + P(lambda, s)

    with G = (2 pi)^-s Gamma(s) e^(-pi i s / 2 + 2 pi i lambda^2) and
    P = (2 pi)^-s Gamma(s) e^(pi i s / 2 - 2 pi i (1 - lambda) lambda) L(1 - lambda, 1 - {lambda}, s).

    Arguments:
    'lambda_' -- a RationalParam, Fraction or "b/d" string.
    's' -- the argument; not a non-positive integer.
    'policy' -- optional PrecisionPolicy.
    '''
    lam = LerchParams(lambda_).lambda_
    if not isinstance(lam, RationalParam):
        raise DomainError(f"functional_split needs a rational lambda, got {lambda_}")

    policy = policy or PrecisionPolicy.default()
    s = HPComplex.coerce(s, policy.working_digits)
    with policy.context():
        g, p = functional_split_mp(lam, s.value, policy.working_digits)
        return FunctionalSplit(HPComplex.from_mpc(g, policy.working_digits),
                               HPComplex.from_mpc(p, policy.working_digits))

def split_residual(lambda_, s, policy=None):
    '''|conj(L(lambda, lambda, 1 - conj s)) - (G L(lambda, lambda, s) + P)| as an mpf.'''
    lam = LerchParams(lambda_).lambda_
    policy = policy or PrecisionPolicy.default()
    s = HPComplex.coerce(s, policy.working_digits)
    params = LerchParams(lam, lam)
    with policy.context():
        z = s.value
        g, p = functional_split_mp(lam, z, policy.working_digits)
        lhs = conj(lerch_mp(params, 1 - conj(z), policy.working_digits)[0])
        return abs(lhs - (g * lerch_mp(params, z, policy.working_digits)[0] + p))
