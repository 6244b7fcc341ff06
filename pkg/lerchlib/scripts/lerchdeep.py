import logging
import sys
from argparse import ArgumentParser
from fractions import Fraction
from math import sqrt
from mpmath import nstr
from lerchlib.util import config
from lerchlib.util.cliutil import configure_logging
from lerchlib.util.cliutil import exits_on_error
from lerchlib.util.cliutil import rational_arg
from lerchlib.util.errors import VerificationFailure
from lerchlib.kernel.hpcomplex import to_fraction
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.lerch.rationalparam import RationalParam
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.contour import locate_zero_contour
from lerchlib.zeros.rectangle import Rectangle
from lerchlib.zeros.scanconfig import ScanConfig
from lerchlib.zeros.scanner import scan_zeros

def first_zeros(params, count, policy, workers=None, t_max=16):
    '''Scans upward, doubling the height, until at least count zeros are found.'''
    while True:
        zeros = scan_zeros(params, ScanConfig(t_max, policy=policy, workers=workers))
        if len(zeros) >= count:
            return zeros

        t_max *= 2

def contour_box(zero):
    '''A square around a zero, small enough to hold no other zero.'''
    half_width = min(Fraction(1, 10), to_fraction(zero.radius_bound / (2 * sqrt(2)), 6))
    return Rectangle.square(to_fraction(zero.beta, 12), to_fraction(zero.gamma_t, 12), half_width)

@exits_on_error
def deep_check(lambda_, indices, digits, tolerance=None, workers=None):
    '''
    Computes beta - 1/2 for the given zeros of L(lambda, lambda, s) with both
    Muller refinement and the contour integral, and checks that the two
    methods agree.

    Returns a list of (index, muller deviation, contour deviation) tuples.
    '''
    policy = PrecisionPolicy(digits)
    params = LerchParams(lambda_, lambda_)
    tolerance = tolerance or policy.half_digits_tolerance
    zeros = first_zeros(params, max(indices), policy, workers)
    tracker = ArgumentTracker(params, policy)
    results = []
    disagreements = []
    with policy.context():
        for index in indices:
            muller_zero = zeros[index - 1]
            contour_zero = locate_zero_contour(params, contour_box(muller_zero), policy, tracker)
            difference = abs(muller_zero.rho - contour_zero.rho)
            print(f"{index}, {nstr(muller_zero.deviation, 3)}, {nstr(contour_zero.deviation, 3)}, "
                  f"{nstr(difference, 3)}")

            results.append((index, muller_zero.deviation, contour_zero.deviation))
            if difference > tolerance:
                disagreements.append(index)

    if disagreements:
        raise VerificationFailure(f"Muller and contour results disagree for zeros {disagreements}")

    return results

def cli():
    configure_logging()

    parser = ArgumentParser(description="Compute beta - 1/2 for the first zeros of L(lambda, lambda, s) at high precision by two methods.")
    parser.add_argument("--lambda", dest="lambda_", type=rational_arg, default=RationalParam(3, 4), help="lambda as b/d")
    parser.add_argument("--index", type=int, nargs="+", default=[1, 2, 3, 4], help="1-based zero indices")
    parser.add_argument("--digits", type=int, default=config.deep_digits, help="working digits")
    parser.add_argument("--workers", type=int, default=config.pool_workers, help="worker processes")
    args = parser.parse_args()

    logging.info(f"Deep check of zeros {args.index} of L({args.lambda_}, {args.lambda_}, s) at {args.digits} digits")
    deep_check(args.lambda_, args.index, args.digits, workers=args.workers)
    sys.exit(0)

if __name__ == "__main__":
    cli()
