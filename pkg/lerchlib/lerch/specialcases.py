from mpmath import mpf
from mpmath import exp
from mpmath import log
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.hurwitz import euler_maclaurin_sum
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams

# Closed forms that L(lambda, alpha, s) collapses to at lambda, alpha in {1/2, 1}.
# Each goes through a classical identity rather than the Hurwitz decomposition
# used by the evaluator.

def _hurwitz(s, a, digits):
    return euler_maclaurin_sum(s, mpf(a), digits)[0]

def _riemann_zeta(s, digits):
    return _hurwitz(s, 1, digits)

def _eta(s, digits):
    # L(1/2, 1, s): the alternating zeta
    return (1 - exp((1 - s) * log(2))) * _riemann_zeta(s, digits)

def _odd_zeta(s, digits):
    # L(1, 1/2, s) = (2^s - 1) zeta(s)
    return (exp(s * log(2)) - 1) * _riemann_zeta(s, digits)

def _beta(s, digits):
    # L(1/2, 1/2, s) = 2^s L(s, chi_4), with L(s, chi_4) from shifts 1/4 and 3/4
    return exp(-s * log(2)) * (_hurwitz(s, mpf(1) / 4, digits) - _hurwitz(s, mpf(3) / 4, digits))

SPECIAL_CASES = {
    ("1/1", "1/1"): _riemann_zeta,
    ("1/2", "1/1"): _eta,
    ("1/1", "1/2"): _odd_zeta,
    ("1/2", "1/2"): _beta,
}

def special_case_value(lambda_, alpha, s, policy=None):
    '''
    The closed form of L(lambda, alpha, s) for the four parameter pairs
    (1, 1), (1/2, 1), (1, 1/2) and (1/2, 1/2).

    Arguments:
    'lambda_', 'alpha' -- "b/d" strings naming one of the special pairs.
    's' -- the argument, away from the poles of the closed form.
    '''
    params = LerchParams(lambda_, alpha)
    key = (str(params.lambda_), str(params.alpha))
    if key not in SPECIAL_CASES:
        raise KeyError(f"no closed form for L({lambda_}, {alpha}, s)")

    policy = policy or PrecisionPolicy.default()
    s = HPComplex.coerce(s, policy.working_digits)
    with policy.context():
        return HPComplex.from_mpc(SPECIAL_CASES[key](s.value, policy.working_digits), policy.working_digits)
