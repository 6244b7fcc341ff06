from mpmath import mp
from mpmath import mpf
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import PrecisionError

class PrecisionPolicy:
    '''
    Working precision for a computation. Results are computed with
    working_digits significant digits and are trusted to target_error,
    which gives up guard_digits of them to rounding.

    Arguments:
    'working_digits' -- decimal digits of working precision (default from
        config, overridable with LERCHLIB_DIGITS).
    'guard_digits' -- digits held back from the error target, at least 5.
    '''

    def __init__(self, working_digits=None, guard_digits=None):
        working_digits = int(working_digits if working_digits is not None else config.default_digits)
        guard_digits = int(guard_digits if guard_digits is not None else config.guard_digits)
        if guard_digits < 5:
            raise DomainError(f"guard_digits must be at least 5, got {guard_digits}")

        if working_digits < 15 or working_digits <= guard_digits:
            raise DomainError(f"working_digits must be at least 15 and exceed guard_digits, got {working_digits}")

        if working_digits > config.max_digits:
            raise PrecisionError(f"{working_digits} digits exceeds the configured limit of {config.max_digits}")

        self._working_digits = working_digits
        self._guard_digits = guard_digits

    @classmethod
    def default(cls):
        '''The policy built from the configured defaults.'''
        return cls()

    @property
    def working_digits(self):
        '''Gets the number of decimal digits computations run at.'''
        return self._working_digits

    @property
    def guard_digits(self):
        '''Gets the number of digits held back from the error target.'''
        return self._guard_digits

    @property
    def target_error(self):
        '''Gets the error target 10^(guard_digits - working_digits) as an mpf.'''
        with mp.workdps(self._working_digits):
            return mpf(10) ** (self._guard_digits - self._working_digits)

    @property
    def half_digits_tolerance(self):
        '''Gets 10^(-working_digits/2), the residual and agreement tolerance for zeros.'''
        with mp.workdps(self._working_digits):
            return mpf(10) ** (-(self._working_digits // 2))

    def with_digits(self, working_digits):
        '''Returns a copy of this policy running at a different precision.'''
        return PrecisionPolicy(working_digits, self._guard_digits)

    def context(self):
        '''Context manager that sets mpmath's working precision to this policy.'''
        return mp.workdps(self._working_digits)

    def __eq__(self, other):
        return (
            isinstance(other, PrecisionPolicy)
            and other.working_digits == self._working_digits
            and other.guard_digits == self._guard_digits)

    def __hash__(self):
        return hash((self._working_digits, self._guard_digits))

    def __repr__(self):
        return f"PrecisionPolicy({self._working_digits}, guard_digits={self._guard_digits})"
