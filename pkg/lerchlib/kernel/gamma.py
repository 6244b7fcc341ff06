from functools import lru_cache
from math import ceil
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import exp
from mpmath import floor
from mpmath import log
from mpmath import pi
from lerchlib.util import config
from lerchlib.util.errors import PoleError
from lerchlib.util.errors import PrecisionError
from lerchlib.kernel.bernoulli import bernoulli_even
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.precisionpolicy import PrecisionPolicy

# Extra decimal digits carried through the shift and the series.
_internal_guard = 10

@lru_cache(maxsize=None)
def _stirling_coefficient(k, prec):
    # B_2k / (2k (2k - 1)) at binary precision prec
    b = bernoulli_even(k)
    with mp.workprec(prec):
        return mpf(b.numerator) / (b.denominator * 2 * k * (2 * k - 1))

def is_gamma_pole(z):
    return z.imag == 0 and z.real <= 0 and z.real == floor(z.real)

def log_gamma_mp(z, digits):
    '''
    A logarithm of Gamma(z) at the current mpmath precision: z is shifted
    right until Re z >= 0.7 * digits, the Stirling series is summed there
    and the shift is undone by dividing by z (z+1) ... (z+n-1). The branch
    is not the principal one; exp() of the result is Gamma(z).
    '''
    if is_gamma_pole(z):
        raise PoleError(f"Gamma has a pole at {z}")

    threshold = int(ceil(0.7 * digits))
    shift = max(0, int(ceil(threshold - z.real)))
    w = z + shift
    product = mpc(1)
    for j in range(shift):
        product *= z + j

    series = (w - 0.5) * log(w) - w + log(2 * pi) / 2
    tol = mpf(10) ** (-digits) / 4
    w2 = w * w
    wpow = w
    previous = None
    for k in range(1, config.em_term_cap + 1):
        term = _stirling_coefficient(k, mp.prec) / wpow
        size = abs(term)
        if size < tol:
            return series - log(product)

        if previous is not None and size > previous:
            break

        previous = size
        series += term
        wpow *= w2

    raise PrecisionError(f"Stirling series did not converge at z = {z}")

def gamma_mp(z, digits):
    '''Gamma(z) at the current mpmath precision.'''
    return exp(log_gamma_mp(z, digits))

def gamma_hp(s, policy=None):
    '''
    Gamma(s) for complex s with an error below the policy's target.

    Arguments:
    's' -- the argument, any value HPComplex.coerce accepts; not a
        non-positive integer.
    'policy' -- optional PrecisionPolicy.
    '''
    policy = policy or PrecisionPolicy.default()
    digits = policy.working_digits
    if digits > config.max_digits:
        raise PrecisionError(f"{digits} digits exceeds the configured limit of {config.max_digits}")

    s = HPComplex.coerce(s, digits)
    with mp.workdps(digits + _internal_guard):
        return HPComplex.from_mpc(gamma_mp(s.value, digits + _internal_guard), digits)
