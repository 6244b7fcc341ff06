from mpmath import mpf
from mpmath import mpc
from mpmath import nint
from mpmath import pi
from mpmath import quad
from lerchlib.util.errors import CountNotOne
from lerchlib.util.errors import QuadratureError
from lerchlib.kernel.hpcomplex import to_mpf
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_deriv_mp
from lerchlib.lerch.evaluation import lerch_mp
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.rectangle import Rectangle
from lerchlib.zeros.zerorecord import Method
from lerchlib.zeros.zerorecord import ZeroRecord

class _LogDerivative:
    '''L'/L along a contour, memoised so several moments share evaluations.'''

    def __init__(self, params, digits):
        self._params = params
        self._digits = digits
        self._values = {}

    def __call__(self, z):
        value = self._values.get(z)
        if value is None:
            v, dv = lerch_deriv_mp(self._params, z, self._digits)
            if v == 0:
                raise QuadratureError(f"L vanishes on the contour at {z}")

            value = dv / v
            self._values[z] = value

        return value


def _path(rectangle):
    corners = [mpc(to_mpf(s), to_mpf(t)) for s, t in rectangle.corners()]
    return corners + corners[:1]

def _moment(log_derivative, path, weight, max_degree):
    integral, error = quad(lambda z: weight(z) * log_derivative(z), path,
                           method="gauss-legendre", error=True, maxdegree=max_degree)

    return integral / (2j * pi), error / (2 * pi)

def count_zeros_quadrature(params, rectangle, policy=None, max_degree=8):
    '''
    Counts zeros in a rectangle as (1 / 2 pi i) times the contour integral
    of L'/L, rounded to the nearest integer. For lambda = 1 a pole at
    s = 1 inside the rectangle is added back.
    '''
    params = LerchParams.coerce(params)
    policy = policy or PrecisionPolicy.default()
    with policy.context():
        log_derivative = _LogDerivative(params, policy.working_digits)
        value, error = _moment(log_derivative, _path(rectangle), lambda z: 1, max_degree)
        count = int(nint(value.real))
        if abs(value - count) > mpf(1) / 4 or error > mpf(1) / 4:
            raise QuadratureError(f"zero-count integral {value} (error {error}) is not near an integer")

    if params.lambda_.is_one and rectangle.contains_strictly(1, 0):
        count += 1

    return count

def locate_zero_contour(params, box, policy=None, tracker=None, max_degree=8):
    '''
    Locates the single zero inside a rectangle as

        rho = (1 / 2 pi i) * contour integral of s L'(s) / L(s) ds,

    after checking by the argument principle that the rectangle holds
    exactly one zero. Gauss-Legendre quadrature runs along each edge.

    Arguments:
    'params' -- rational LerchParams.
    'box' -- the Rectangle, holding exactly one zero.
    'policy' -- optional PrecisionPolicy.
    'tracker' -- optional ArgumentTracker for the count check.

    Returns a ZeroRecord with Method.Contour.
    '''
    params = LerchParams.coerce(params)
    policy = policy or PrecisionPolicy.default()
    tracker = tracker or ArgumentTracker(params, policy)
    if not isinstance(box, Rectangle):
        box = Rectangle(*box)

    count = tracker.count(box, nudge=0).count
    if count != 1:
        raise CountNotOne(f"{box} holds {count} zeros, not one")

    digits = policy.working_digits
    with policy.context():
        path = _path(box)
        log_derivative = _LogDerivative(params, digits)
        zeroth, zeroth_error = _moment(log_derivative, path, lambda z: 1, max_degree)
        rho, rho_error = _moment(log_derivative, path, lambda z: z, max_degree)
        tolerance = policy.half_digits_tolerance
        if abs(zeroth - 1) > tolerance or max(zeroth_error, rho_error) > tolerance:
            raise QuadratureError(
                f"contour integrals did not converge in {box}: count {zeroth}, error {rho_error}")

        if not box.contains(rho):
            raise QuadratureError(f"contour integral placed the zero at {rho}, outside {box}")

        residual = abs(lerch_mp(params, rho, digits)[0])
        clearance = float(min(rho.real - to_mpf(box.sigma_lo), to_mpf(box.sigma_hi) - rho.real,
                              rho.imag - to_mpf(box.t_lo), to_mpf(box.t_hi) - rho.imag))

        return ZeroRecord(rho.real, rho.imag, residual, clearance, Method.Contour, digits, params.alpha_value())
