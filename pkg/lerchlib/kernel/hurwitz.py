from functools import lru_cache
from math import ceil
from math import factorial
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import exp
from mpmath import log
from mpmath import pi
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import PoleError
from lerchlib.util.errors import PrecisionError
from lerchlib.kernel.bernoulli import bernoulli_even
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.hpcomplex import to_mpf
from lerchlib.kernel.precisionpolicy import PrecisionPolicy

@lru_cache(maxsize=None)
def _em_coefficient(k, prec):
    # B_2k / (2k)! at binary precision prec
    b = bernoulli_even(k)
    with mp.workprec(prec):
        return mpf(b.numerator) / (b.denominator * factorial(2 * k))

def _em_pass(s, a, n_head, tol, derivative, regularize):
    head = mpc(0)
    dhead = mpc(0)
    for n in range(n_head):
        la = log(a + n)
        term = exp(-s * la)
        head += term
        if derivative:
            dhead -= la * term

    x = a + n_head
    lx = log(x)
    xs = exp(-s * lx)
    if regularize:
        tail = -lx
        dtail = lx * lx / 2
    else:
        tail = x * xs / (s - 1)
        dtail = -lx * tail - tail / (s - 1)

    value = head + tail + xs / 2
    dvalue = dhead + dtail - lx * xs / 2

    x2 = x * x
    xpow = xs / x
    poch = s
    dpoch = mpc(1)
    previous = None
    for k in range(1, config.em_term_cap + 1):
        c = _em_coefficient(k, mp.prec)
        term = c * poch * xpow
        dterm = c * (dpoch - lx * poch) * xpow if derivative else mpc(0)
        size = abs(term)
        dsize = abs(dterm)
        if s.real + 2 * k - 1 > 0:
            small = size <= tol * max(1, abs(value)) / 4
            if derivative:
                small = small and dsize <= tol * max(1, abs(dvalue)) / 4

            if small:
                return value, 4 * size, dvalue, 4 * dsize

            if previous is not None and k > 2 and size > previous:
                return None

        previous = size
        value += term
        dvalue += dterm
        a1 = s + (2 * k - 1)
        a2 = s + 2 * k
        dpoch = dpoch * a1 * a2 + poch * (a1 + a2)
        poch = poch * a1 * a2
        xpow /= x2

    return None

def euler_maclaurin_sum(s, a, digits, derivative=False, regularize=False):
    '''
    Euler-Maclaurin evaluation of zeta(s, a) and optionally its s-derivative
    at the current mpmath precision. The first N terms are summed directly,
    with N chosen so that N + a exceeds both |Im s|/pi and the digit count,
    and the tail is closed by the Bernoulli correction series.

    With regularize set, s must be 1 and the pole term 1/(s-1) is dropped,
    giving the constant and linear terms of the Laurent expansion at s = 1.

    Returns (value, value_bound, derivative, derivative_bound) as mpmath
    numbers; the derivative entries are zero unless requested.

    Arguments:
    's' -- mpc argument.
    'a' -- mpf shift, a > 0.
    'digits' -- decimal digits the truncation error must reach.
    '''
    if a <= 0:
        raise DomainError(f"Hurwitz shift a must be positive, got {a}")

    if s == 1 and not regularize:
        raise PoleError("zeta(s, a) has a pole at s = 1")

    tol = mpf(10) ** (-digits)
    shift = max(int(ceil(abs(s.imag) / pi)), int(digits))
    for _ in range(4):
        n_head = max(0, shift - int(a))
        result = _em_pass(s, a, n_head, tol, derivative, regularize)
        if result is not None:
            return result

        shift *= 2

    raise PrecisionError(
        f"Euler-Maclaurin tail did not reach 1e-{digits} within {config.em_term_cap} terms at s = {s}")

def _prepare(s, a, policy):
    policy = policy or PrecisionPolicy.default()
    s = HPComplex.coerce(s, policy.working_digits)
    return s, policy

def hurwitz_zeta_pair(s, a, policy=None):
    '''
    Hurwitz zeta(s, a) together with its s-derivative, both as HPComplex.

    Arguments:
    's' -- the argument, any value HPComplex.coerce accepts; s != 1.
    'a' -- the shift, a > 0, as int, Fraction, decimal string or mpf.
    'policy' -- optional PrecisionPolicy.
    '''
    s, policy = _prepare(s, a, policy)
    with policy.context():
        value, _, dvalue, _ = euler_maclaurin_sum(s.value, to_mpf(a), policy.working_digits, derivative=True)
        return (HPComplex.from_mpc(value, policy.working_digits),
                HPComplex.from_mpc(dvalue, policy.working_digits))

def hurwitz_zeta(s, a, policy=None):
    '''Hurwitz zeta(s, a) = sum_{n >= 0} (n + a)^-s, analytically continued in s.'''
    s, policy = _prepare(s, a, policy)
    with policy.context():
        value, _, _, _ = euler_maclaurin_sum(s.value, to_mpf(a), policy.working_digits)
        return HPComplex.from_mpc(value, policy.working_digits)

def hurwitz_zeta_deriv(s, a, policy=None):
    '''The s-derivative of Hurwitz zeta(s, a).'''
    return hurwitz_zeta_pair(s, a, policy)[1]
