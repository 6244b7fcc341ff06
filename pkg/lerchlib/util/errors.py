class LerchError(Exception):
    '''
    Base class for every error raised by lerchlib. The exit code is what the
    command-line scripts return when the error reaches them.
    '''

    exit_code = 1


class DomainError(LerchError):
    '''An argument lies outside the region where an operation is defined.'''

    exit_code = 2


class PoleError(DomainError):
    '''Evaluation requested at a pole (gamma at non-positive integers, zeta at s=1).'''


class PoleInsideError(DomainError):
    '''A counting rectangle contains the pole at s=1 and pole handling is off.'''


class CapExceeded(DomainError):
    '''A configured table or term cap would be exceeded.'''


class ParseError(DomainError):
    '''A command-line value could not be parsed.'''


class NumericalError(LerchError):
    '''Overflow or NaN in a high-precision value.'''

    exit_code = 3


class PrecisionError(NumericalError):
    '''The requested precision cannot be reached within the configured limits.'''


class NonConvergence(NumericalError):
    '''An iteration did not settle within its step budget.'''


class DriftError(NonConvergence):
    '''A root iteration converged outside the region it was started in.'''


class BoundaryZeroError(NumericalError):
    '''
    The argument of L could not be tracked along an edge: a zero (or the pole)
    lies on or extremely close to it.

    Arguments:
    'edge' -- which edge failed: "bottom", "right", "top" or "left".
    '''

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class CompletenessError(NumericalError):
    '''
    The refined zero list does not match the certified zero count of its window.

    Arguments:
    'zeros' -- the zeros found before giving up, so callers can keep them.
    '''

    def __init__(self, message, zeros=None):
        super().__init__(message)
        self.zeros = zeros or []


class CountNotOne(NumericalError):
    '''A single-zero contour was requested around a box holding 0 or several zeros.'''


class QuadratureError(NumericalError):
    '''A contour integral did not reach its tolerance.'''


class NoAnnulusFound(NumericalError):
    '''Every ring around a zero up to k_max contains another zero.'''


class VerificationFailure(LerchError):
    '''An identity or reproduction check failed.'''

    exit_code = 4


class UnmatchedPairWarning(UserWarning):
    '''An off-line zero has no near-symmetric partner within pair_tol.'''
