from math import log as flog
from math import pi as fpi
from mpmath import mp
from mpmath import mpf
from lerchlib.util import config
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.rectangle import Rectangle

def deviation_window(t, window_factor=config.deviation_window_factor):
    '''The allowed deviation window_factor * log T for counting and average-symmetry checks.'''
    return window_factor * flog(float(t))


class SumCheck:
    '''
    The sum of beta - 1/2 over zeros with 0 < gamma <= T against its main
    term (T / 4 pi) log(alpha / lambda).

    Arguments:
    'computed_sum' -- the sum over the zero list.
    'main_term' -- the main term.
    'window' -- the allowed deviation.
    '''

    def __init__(self, computed_sum, main_term, window):
        self._computed_sum = computed_sum
        self._main_term = main_term
        self._window = window

    @property
    def computed_sum(self):
        return self._computed_sum

    @property
    def main_term(self):
        return self._main_term

    @property
    def deviation(self):
        '''Gets computed_sum - main_term.'''
        return self._computed_sum - self._main_term

    @property
    def window(self):
        return self._window

    @property
    def within(self):
        '''Gets whether the deviation lies inside the window.'''
        return abs(self.deviation) <= self._window

    def __repr__(self):
        return (f"SumCheck(computed_sum={self._computed_sum:.6g}, main_term={self._main_term:.6g}, "
                f"window={self._window:.3g})")


def theorem1_sum(params, zeros, t, window_factor=config.deviation_window_factor):
    '''
    Sums beta - 1/2 over the zeros with 0 < gamma <= T. The zeros are
    symmetric about the critical line on average: the sum stays within
    O(log T) of (T / 4 pi) log(alpha / lambda), which is 0 for equal
    parameters.

    Arguments:
    'params' -- the LerchParams the zeros belong to.
    'zeros' -- ZeroRecords complete up to T.
    't' -- the height T.
    'window_factor' -- the window is window_factor * log T.

    Returns a SumCheck.
    '''
    params = LerchParams.coerce(params)
    with mp.workdps(max([zero.precision for zero in zeros] or [15])):
        half = mpf(1) / 2
        total = sum((zero.beta - half for zero in zeros if 0 < zero.gamma_t <= t), mpf(0))

    if params.equal_params:
        main_term = 0.0
    else:
        main_term = float(t) / (4 * fpi) * flog(float(params.alpha_value() / params.lambda_value()))

    return SumCheck(float(total), main_term, deviation_window(t, window_factor))

def counting_check(params, t, policy=None, nudge=config.boundary_nudge, tracker=None):
    '''
    Counts the zeros with 0 < gamma < T in the strip -1 <= sigma <= 1 + alpha
    and compares the count with (T / 2 pi) log(T / (2 pi e alpha lambda)).
    The bottom edge sits at the nudge height to keep off the real axis.

    Returns a CountResult; compare its deviation with deviation_window(T).
    '''
    params = LerchParams.coerce(params)
    tracker = tracker or ArgumentTracker(params, policy or PrecisionPolicy.default())
    rectangle = Rectangle(-1, 1 + params.alpha.fraction, nudge, t)
    return tracker.count(rectangle, nudge=nudge)
