from fractions import Fraction
from lerchlib.util.errors import DomainError

# Exponent of the best known bound for Riemann zeta on the half-line.
SUBCONVEXITY_EXPONENT = Fraction(64, 205)

def growth_bound_mu(lambda_, alpha, sigma, sigma0=-2):
    '''
    A piecewise-linear exponent mu(sigma) with L(lambda, alpha, sigma + it)
    = O(t^(mu(sigma) + eps)), valid for every parameter pair:

        1/2 - sigma                   for sigma0 <= sigma <= 0
        1/2 + (64/205 - 1) sigma      for 0 <= sigma <= 1/2
        (64/205) (1 - sigma)          for 1/2 <= sigma <= 1
        0                             for sigma >= 1

    Rational sigma gives an exact Fraction; anything else a float.

    Arguments:
    'lambda_', 'alpha' -- the parameters; the bound does not depend on them.
    'sigma' -- the real part.
    'sigma0' -- the leftmost abscissa the bound is claimed for.
    '''
    exact = isinstance(sigma, (int, Fraction))
    if not exact:
        sigma = float(sigma)

    if sigma < sigma0:
        raise DomainError(f"growth bound requested at sigma = {sigma} below sigma0 = {sigma0}")

    theta = SUBCONVEXITY_EXPONENT if exact else float(SUBCONVEXITY_EXPONENT)
    half = Fraction(1, 2) if exact else 0.5
    if sigma <= 0:
        mu = half - sigma
    elif sigma <= half:
        mu = half + (theta - 1) * sigma
    elif sigma <= 1:
        mu = theta * (1 - sigma)
    else:
        mu = 0 * sigma

    return mu
