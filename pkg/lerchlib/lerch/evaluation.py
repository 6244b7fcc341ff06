from fractions import Fraction
from math import ceil
from math import floor
from math import log as flog
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import exp
from mpmath import expjpi
from mpmath import log
from mpmath import pi
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import PoleError
from lerchlib.util.errors import PrecisionError
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.hpcomplex import to_mpf
from lerchlib.kernel.hurwitz import euler_maclaurin_sum
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams

def unit_root(x):
    '''
    e(x) = exp(2 pi i x). Exact rationals are reduced modulo 1 before the
    multiplication by 2 pi so that large numerators lose no precision.
    '''
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        r = x - floor(x)
        return expjpi(mpf(2 * r.numerator) / r.denominator)

    return expjpi(2 * x)

def lerch_rational_mp(params, s, digits, derivative=False):
    '''
    L(b/d, alpha, s) = d^-s sum_{k=0}^{d-1} e(bk/d) zeta(s, (k + alpha)/d)
    at the current mpmath precision, valid on all of C except s = 1 when
    lambda = 1. At s = 1 with lambda != 1 the poles of the Hurwitz terms
    cancel because the roots of unity sum to zero, so each term is taken
    in its regularised form.

    Returns (value, bound, derivative) with derivative zero unless asked for.
    '''
    lam = params.lambda_
    alpha = params.alpha.fraction
    b, d = lam.num, lam.den
    regularize = s == 1
    if regularize and lam.is_one:
        raise PoleError("L(1, alpha, s) has a pole at s = 1")

    total = mpc(0)
    dtotal = mpc(0)
    bound = mpf(0)
    for k in range(d):
        a = to_mpf((k + alpha) / d)
        twist = expjpi(mpf(2 * (b * k % d)) / d)
        value, err, dvalue, _ = euler_maclaurin_sum(s, a, digits, derivative, regularize)
        total += twist * value
        dtotal += twist * dvalue
        bound += err

    log_d = log(d)
    scale = exp(-s * log_d)
    value = scale * total
    dvalue = -log_d * value + scale * dtotal if derivative else mpc(0)
    return value, bound * abs(scale), dvalue

def _twisted_tail_coefficients(z, count):
    # Taylor coefficients of 1 / (1 - z e^u) in u.
    inv = 1 / (1 - z)
    coefficients = [inv]
    factorials = [mpf(1)]
    for k in range(1, count + 1):
        factorials.append(factorials[-1] * k)
        total = mpc(0)
        for j in range(1, k + 1):
            total += coefficients[k - j] / factorials[j]

        coefficients.append(z * inv * total)

    return coefficients

def _twisted_tail(z, s, x0, tol):
    # sum_{m >= 0} z^m (x0 + m)^-s as sum_k a_k f^(k)(x0) with f(x) = x^-s.
    # Alternate coefficients vanish for lambda = 1/2, so stopping and
    # divergence both look at two consecutive terms.
    derivative_term = exp(-s * log(x0))
    total = mpc(0)
    coefficients = _twisted_tail_coefficients(z, 16)
    sizes = []
    for k in range(config.em_term_cap + 1):
        if k >= len(coefficients):
            coefficients = _twisted_tail_coefficients(z, 2 * len(coefficients))

        term = coefficients[k] * derivative_term
        sizes.append(abs(term))
        limit = tol * max(1, abs(total)) / 4
        if k > 0 and max(sizes[-2:]) <= limit:
            return total, 4 * max(sizes[-2:])

        if k > 3 and sizes[-1] > 2 * max(sizes[-3:-1]):
            return None

        total += term
        derivative_term *= -(s + k) / x0

    return None

def lerch_series_mp(params, s, digits, margin=config.series_margin):
    '''
    L(lambda, alpha, s) from its defining series, for real lambda and alpha
    in (0, 1] and Re s > 1 + margin. The first M terms are summed directly
    and the remainder is closed by the integral bound when that is already
    small enough, by the Hurwitz tail for lambda = 1, and otherwise by the
    expansion of the twisted tail in derivatives of x^-s.

    Returns (value, bound).
    '''
    sigma = s.real
    if sigma <= 1 + margin:
        raise DomainError(f"the convergent series needs Re s > {1 + margin}, got {sigma}")

    lam = params.lambda_value()
    alpha = params.alpha_value()
    tol = mpf(10) ** (-digits)
    distance = min(lam, 1 - lam) if lam < 1 else mpf(0)
    if distance > 0:
        length = int(ceil((abs(s) + digits * flog(10)) / float(2 * pi * distance))) + 1
    else:
        length = max(int(digits), int(ceil(abs(s.imag) / float(pi))))

    for _ in range(4):
        head = mpc(0)
        for m in range(length):
            head += unit_root(lam * m) * exp(-s * log(m + alpha))

        x0 = length + alpha
        integral_bound = exp((1 - sigma) * log(x0 - 1)) / (sigma - 1) if x0 > 1 else None
        if integral_bound is not None and integral_bound < tol * max(1, abs(head)):
            return head, integral_bound

        twist = unit_root(lam * length)
        if distance == 0:
            tail, _, _, bound = euler_maclaurin_sum(s, x0, digits)
            return head + twist * tail, bound

        result = _twisted_tail(unit_root(lam), s, x0, tol)
        if result is not None:
            return head + twist * result[0], result[1]

        length *= 2

    raise PrecisionError(f"twisted tail of L did not converge at s = {s}")

def lerch_mp(params, s, digits):
    '''
    L(lambda, alpha, s) at the current mpmath precision. Rational parameters
    use the Hurwitz decomposition everywhere; other parameters are limited
    to the convergent series. Returns (value, bound).
    '''
    if params.is_rational:
        value, bound, _ = lerch_rational_mp(params, s, digits)
        return value, bound

    return lerch_series_mp(params, s, digits)

def lerch_deriv_mp(params, s, digits):
    '''(L, dL/ds) at the current mpmath precision, rational parameters only.'''
    if not params.is_rational:
        raise DomainError("derivatives are only available for rational parameters")

    value, _, dvalue = lerch_rational_mp(params, s, digits, derivative=True)
    return value, dvalue

def _prepare(params, s, policy):
    params = LerchParams.coerce(params)
    policy = policy or PrecisionPolicy.default()
    return params, HPComplex.coerce(s, policy.working_digits), policy

def lerch_with_bound(params, s, policy=None):
    '''L(lambda, alpha, s) as an HPComplex together with an mpf truncation bound.'''
    params, s, policy = _prepare(params, s, policy)
    with policy.context():
        value, bound = lerch_mp(params, s.value, policy.working_digits)
        return HPComplex.from_mpc(value, policy.working_digits), bound

def lerch(params, s, policy=None):
    '''
    The Lerch zeta-function L(lambda, alpha, s) = sum_{m >= 0} e(lambda m) (m + alpha)^-s,
    analytically continued for rational parameters.

    Arguments:
    'params' -- a LerchParams, or a (lambda, alpha) tuple.
    's' -- the argument, any value HPComplex.coerce accepts.
    'policy' -- optional PrecisionPolicy.
    '''
    return lerch_with_bound(params, s, policy)[0]

def lerch_rational(params, s, policy=None):
    '''L through the Hurwitz decomposition; both parameters must be rational.'''
    params, s, policy = _prepare(params, s, policy)
    if not params.is_rational:
        raise DomainError(f"parameters {params} are not both rational")

    with policy.context():
        value, _, _ = lerch_rational_mp(params, s.value, policy.working_digits)
        return HPComplex.from_mpc(value, policy.working_digits)

def lerch_series(params, s, policy=None, margin=config.series_margin):
    '''L through its defining series, for Re s > 1 + margin.'''
    params, s, policy = _prepare(params, s, policy)
    with policy.context():
        value, _ = lerch_series_mp(params, s.value, policy.working_digits, margin)
        return HPComplex.from_mpc(value, policy.working_digits)

def lerch_deriv(params, s, policy=None):
    '''The s-derivative of L(lambda, alpha, s) for rational parameters.'''
    params, s, policy = _prepare(params, s, policy)
    with policy.context():
        _, dvalue = lerch_deriv_mp(params, s.value, policy.working_digits)
        return HPComplex.from_mpc(dvalue, policy.working_digits)
