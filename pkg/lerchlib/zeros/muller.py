import logging
from fractions import Fraction
from mpmath import mpf
from mpmath import mpc
from mpmath import sqrt
from lerchlib.util import config
from lerchlib.util.errors import BoundaryZeroError
from lerchlib.util.errors import DriftError
from lerchlib.util.errors import NonConvergence
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.hpcomplex import to_fraction
from lerchlib.kernel.hpcomplex import to_mpf
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_mp
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.rectangle import Rectangle
from lerchlib.zeros.zerorecord import Method
from lerchlib.zeros.zerorecord import ZeroRecord

def muller_iterate(f, x0, x1, x2, tol, max_iter=config.muller_max_iter):
    '''
    Muller's method from three starting points, in divided-difference form.
    Stops once a step is shorter than tol * max(1, |x|).

    Returns the last iterate as an mpc.
    '''
    fx0, fx1, fx2 = f(x0), f(x1), f(x2)
    for _ in range(max_iter):
        if fx2 == 0:
            return x2

        fx2x1 = (fx1 - fx2) / (x1 - x2)
        fx2x0 = (fx0 - fx2) / (x0 - x2)
        fx1x0 = (fx0 - fx1) / (x0 - x1)
        w = fx2x1 + fx2x0 - fx1x0
        fx2x1x0 = (fx1x0 - fx2x1) / (x0 - x2)
        if w == 0 and fx2x1x0 == 0:
            raise NonConvergence(f"Muller iteration degenerated at {x2}")

        x0, fx0 = x1, fx1
        x1, fx1 = x2, fx2
        r = sqrt(w ** 2 - 4 * fx2 * fx2x1x0)
        if abs(w - r) > abs(w + r):
            r = -r

        x2 -= 2 * fx2 / (w + r)
        fx2 = f(x2)
        if abs(x2 - x1) < tol * max(1, abs(x2)):
            return x2

    raise NonConvergence(f"Muller iteration did not converge in {max_iter} steps (last iterate {x2})")

def certify_isolation(tracker, rho, start_radius=config.certify_radius, min_radius=Fraction(1, 10 ** 6)):
    '''
    Finds a square around rho holding exactly one zero, halving its size
    while it holds more. The square is centred on a short rational near rho.

    Returns the radius of a disc around rho that holds no other zero.
    '''
    center_sigma = to_fraction(rho.real, 12)
    center_t = to_fraction(rho.imag, 12)
    with tracker.policy.context():
        offset = float(abs(mpc(to_mpf(center_sigma), to_mpf(center_t)) - rho))

    radius = Fraction(start_radius)
    while radius > min_radius:
        square = Rectangle.square(center_sigma, center_t, radius)
        try:
            count = tracker.count(square, nudge=0).count
        except BoundaryZeroError:
            radius *= Fraction(7, 10)
            continue

        if count == 1:
            return float(radius) - offset

        if count == 0:
            raise NonConvergence(f"no zero found in the certification square around {rho}")

        radius /= 2

    raise NonConvergence(f"could not isolate the zero at {rho}; it may be multiple")

def _box_clearance(box, rho):
    return float(min(rho.real - to_mpf(box.sigma_lo), to_mpf(box.sigma_hi) - rho.real,
                     rho.imag - to_mpf(box.t_lo), to_mpf(box.t_hi) - rho.imag))

def refine_zero(params, guess, policy=None, box=None, box_count=None, tracker=None,
                max_iter=config.muller_max_iter, max_drift=config.muller_max_drift):
    '''
    Refines an approximate zero of L(lambda, alpha, s) with Muller's method
    to the policy's target error and certifies it.

    Arguments:
    'params' -- rational LerchParams.
    'guess' -- the starting point, any value HPComplex.coerce accepts.
    'policy' -- optional PrecisionPolicy.
    'box' -- optional Rectangle the zero must stay in.
    'box_count' -- the certified number of zeros in box, when known; a box
        holding exactly one zero doubles as the isolation certificate.
    'tracker' -- optional ArgumentTracker to share evaluations with.
    'max_drift' -- largest distance the iteration may move from the guess.

    Returns a ZeroRecord.
    '''
    params = LerchParams.coerce(params)
    policy = policy or PrecisionPolicy.default()
    tracker = tracker or ArgumentTracker(params, policy)
    digits = policy.working_digits
    guess = HPComplex.coerce(guess, digits)
    with policy.context():
        z0 = guess.value
        spread = mpf(1) / 32
        if box is not None:
            spread = min(spread, to_mpf(min(box.width, box.height)) / 8)

        f = lambda z: lerch_mp(params, z, digits)[0]
        rho = muller_iterate(f, z0 - spread, z0 + spread * 1j, z0, policy.target_error, max_iter)
        if box is not None and not box.contains(rho):
            raise DriftError(f"Muller iteration left {box} (reached {rho})")

        if abs(rho - z0) > max_drift:
            raise DriftError(f"Muller iteration drifted from {z0} to {rho}")

        residual = abs(f(rho))
        if residual >= policy.half_digits_tolerance:
            raise NonConvergence(f"residual {residual} at {rho} exceeds the working tolerance")

        radius = None
        if box is not None and box_count == 1:
            clearance = _box_clearance(box, rho)
            if clearance > 1e-3:
                radius = clearance

        if radius is None:
            radius = certify_isolation(tracker, rho)

        logging.debug(f"Refined zero {rho} (residual {residual}, isolation radius {radius:.3g})")
        return ZeroRecord(rho.real, rho.imag, residual, radius, Method.Muller, digits, params.alpha_value())
