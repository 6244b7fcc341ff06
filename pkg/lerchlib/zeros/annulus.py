import logging
from math import ceil
from math import log as flog
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from lerchlib.util import config
from lerchlib.util.errors import BoundaryZeroError
from lerchlib.util.errors import CompletenessError
from lerchlib.util.errors import NoAnnulusFound
from lerchlib.kernel.hpcomplex import to_fraction
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.rectangle import Rectangle

class AnnulusResult:
    '''
    A zero-free ring ell r0 < |s - rho| <= (ell + 1) r0 around a zero rho,
    with the zero counts of the discs of radius r_mid = (ell + 1/2) r0 around
    rho and around its reflection 1 - conj(rho). A search that found no
    ring carries the failure message instead.

    Arguments:
    'center' -- the ZeroRecord at the centre.
    'ell' -- the ring index, or None on failure.
    'r0' -- the ring width.
    'count_right' -- zeros in the disc around rho.
    'count_left' -- zeros in the disc around 1 - conj(rho).
    'failure' -- why no ring was found, or None.
    '''

    def __init__(self, center, ell, r0, count_right=None, count_left=None, failure=None):
        self._center = center
        self._ell = ell
        self._r0 = r0
        self._count_right = count_right
        self._count_left = count_left
        self._failure = failure

    @classmethod
    def failed(cls, center, r0, message):
        return cls(center, None, r0, failure=str(message))

    @property
    def center(self):
        return self._center

    @property
    def ell(self):
        return self._ell

    @property
    def failure(self):
        return self._failure

    @property
    def r_inner(self):
        return None if self._ell is None else self._ell * self._r0

    @property
    def r_outer(self):
        return None if self._ell is None else (self._ell + 1) * self._r0

    @property
    def r_mid(self):
        return None if self._ell is None else (self._ell + 0.5) * self._r0

    @property
    def count_right(self):
        return self._count_right

    @property
    def count_left(self):
        return self._count_left

    @property
    def counts_equal(self):
        '''Gets whether both discs hold the same number of zeros; False on failure.'''
        return self._failure is None and self._count_right == self._count_left

    def __repr__(self):
        if self._failure:
            return f"AnnulusResult(gamma={mp.nstr(self._center.gamma_t, 10)}, failure={self._failure!r})"

        return (f"AnnulusResult(gamma={mp.nstr(self._center.gamma_t, 10)}, ell={self._ell}, "
                f"r_mid={self.r_mid:.3f}, right={self._count_right}, left={self._count_left})")


def count_zeros_disc(params, center, radius, zeros, policy=None, tracker=None):
    '''
    Counts zeros in the open disc |s - center| < radius. The circumscribing
    square is counted by the argument principle and must agree with the
    listed zeros inside it; the listed zeros are then tested against the
    disc itself.

    Arguments:
    'center' -- the disc centre as an mpc.
    'radius' -- the disc radius.
    'zeros' -- ZeroRecords covering at least the circumscribing square.
    '''
    policy = policy or PrecisionPolicy.default()
    tracker = tracker or ArgumentTracker(params, policy)
    square = Rectangle.square(to_fraction(center.real, 12), to_fraction(center.imag, 12), radius)
    result = tracker.count(square)
    with policy.context():
        listed = [zero for zero in zeros if result.rectangle.contains(zero.rho)]
        if len(listed) != result.count:
            raise CompletenessError(
                f"{result.rectangle} holds {result.count} zeros but {len(listed)} are listed",
                zeros=listed)

        tolerance = policy.half_digits_tolerance
        inside = 0
        for zero in listed:
            distance = abs(zero.rho - center)
            if abs(distance - mpf(radius)) < tolerance:
                raise BoundaryZeroError(f"zero {zero.rho} lies on the circle of radius {radius}")

            if distance < radius:
                inside += 1

    return inside

def find_zero_free_annulus(params, center, r0=config.annulus_r0, k_max=None, zero_list=(),
                           policy=None, tracker=None):
    '''
    Finds the smallest ring index ell in 1 .. k_max with no listed zero in
    ell r0 < |s - rho| <= (ell + 1) r0 and counts the zeros in the discs of
    radius (ell + 1/2) r0 around rho and around 1 - conj(rho).

    Arguments:
    'params' -- rational LerchParams.
    'center' -- the ZeroRecord rho.
    'r0' -- the ring width.
    'k_max' -- the largest ring index; defaults to ceil(3 log gamma).
    'zero_list' -- every zero within (k_max + 1) r0 of rho and of its
        reflection, for example a scan over the surrounding range.

    Returns an AnnulusResult.
    '''
    params = LerchParams.coerce(params)
    policy = policy or PrecisionPolicy.default()
    tracker = tracker or ArgumentTracker(params, policy)
    if k_max is None:
        k_max = max(1, int(ceil(3 * flog(max(float(center.gamma_t), 1.0)))))

    with policy.context():
        rho = center.rho
        distances = [float(abs(zero.rho - rho)) for zero in zero_list]

    for ell in range(1, k_max + 1):
        inner, outer = ell * r0, (ell + 1) * r0
        if not any(inner < distance <= outer for distance in distances):
            break
    else:
        raise NoAnnulusFound(f"every ring up to ell = {k_max} around {rho} holds a zero")

    r_mid = (ell + 0.5) * r0
    with policy.context():
        reflection = mpc(1 - rho.real, rho.imag)

    count_right = count_zeros_disc(params, rho, r_mid, zero_list, policy, tracker)
    count_left = count_zeros_disc(params, reflection, r_mid, zero_list, policy, tracker)
    logging.debug(f"Annulus around {rho}: ell = {ell}, counts {count_right} / {count_left}")
    return AnnulusResult(center, ell, r0, count_right, count_left)
