import logging
import numpy as np
import pandas as pd
from fractions import Fraction
from aenum import Enum
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import conj
from mpmath import exp
from mpmath import log
from mpmath import pi
from mpmath import sin
from mpmath import sqrt
from lerchlib.util import config
from lerchlib.kernel.gamma import gamma_mp
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_mp
from lerchlib.lerch.functionalequation import functional_equation_rhs_mp
from lerchlib.lerch.functionalequation import functional_split_mp
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.lerch.rationalparam import RationalParam
from lerchlib.lerch.specialcases import SPECIAL_CASES
from lerchlib.symmetry.sums import counting_check
from lerchlib.symmetry.sums import deviation_window
from lerchlib.symmetry.sums import theorem1_sum
from lerchlib.zeros.scanconfig import ScanConfig
from lerchlib.zeros.scanner import scan_zeros

class VerifySuite(Enum):
                    # Label
    FuncEq          = "funceq"
    Conjugation     = "conjugation"
    SpecialCases    = "special-cases"
    Stirling        = "stirling"
    Counting        = "counting"
    Theorem1        = "theorem1"


REPORT_COLUMNS = ["suite", "check", "samples", "max_residual", "threshold", "passed"]

def _row(suite, check, samples, max_residual, threshold):
    max_residual = float(max_residual)
    return {
        "suite": suite.value,
        "check": check,
        "samples": samples,
        "max_residual": max_residual,
        "threshold": float(threshold),
        "passed": bool(max_residual <= threshold),
    }

def _random_param(rng, max_den=10):
    den = int(rng.integers(1, max_den + 1))
    num = int(rng.integers(1, den + 1))
    return RationalParam.from_fraction(Fraction(num, den))

def _random_points(rng, samples, sigma_range=(-1.0, 2.0), t_range=(0.5, 40.0)):
    sigmas = rng.uniform(*sigma_range, samples)
    ts = rng.uniform(*t_range, samples)
    return [mpc(repr(float(sigma)), repr(float(t))) for sigma, t in zip(sigmas, ts)]

def _relative(difference, reference):
    return abs(difference) / max(1, abs(reference))

def _funceq(rng, samples, digits, pairs):
    threshold = mpf(10) ** (-(digits - 10))
    worst = mpf(0)
    worst_split = mpf(0)
    for _ in range(pairs):
        params = LerchParams(_random_param(rng), _random_param(rng))
        for s in _random_points(rng, samples):
            lhs = lerch_mp(params, 1 - s, digits)[0]
            rhs = functional_equation_rhs_mp(params, s, digits)
            worst = max(worst, _relative(rhs - lhs, lhs))

            lam = params.lambda_
            equal = LerchParams(lam, lam)
            g, p = functional_split_mp(lam, s, digits)
            left = conj(lerch_mp(equal, 1 - conj(s), digits)[0])
            worst_split = max(worst_split, _relative(left - (g * lerch_mp(equal, s, digits)[0] + p), left))

    return [
        _row(VerifySuite.FuncEq, "functional equation", pairs * samples, worst, threshold),
        _row(VerifySuite.FuncEq, "split form", pairs * samples, worst_split, threshold),
    ]

def _conjugation(rng, samples, digits, pairs):
    threshold = mpf(10) ** (-(digits - 10))
    worst = mpf(0)
    for _ in range(pairs):
        params = LerchParams(_random_param(rng), _random_param(rng))
        mirrored = LerchParams(params.lambda_.complement(), params.alpha)
        for s in _random_points(rng, samples):
            value = lerch_mp(params, s, digits)[0]
            worst = max(worst, _relative(conj(value) - lerch_mp(mirrored, conj(s), digits)[0], value))

    return [_row(VerifySuite.Conjugation, "conj L(l, a, s) = L(1 - l, a, conj s)", pairs * samples, worst, threshold)]

def _special_cases(rng, samples, digits, pairs):
    threshold = mpf(10) ** (-(digits - 10))
    rows = []
    points = _random_points(rng, samples)
    for (lambda_, alpha), closed_form in SPECIAL_CASES.items():
        params = LerchParams(lambda_, alpha)
        worst = mpf(0)
        for s in points:
            value = lerch_mp(params, s, digits)[0]
            worst = max(worst, _relative(value - closed_form(s, digits), value))

        rows.append(_row(VerifySuite.SpecialCases, f"L({lambda_}, {alpha}, s)", samples, worst, threshold))

    return rows

def _stirling(rng, samples, digits, pairs):
    threshold = mpf(10) ** (-(digits - 10))
    points = _random_points(rng, samples, t_range=(20.0, 200.0))
    worst_ratio = mpf(0)
    worst_recurrence = mpf(0)
    worst_reflection = mpf(0)
    for s in points:
        gamma_s = gamma_mp(s, digits)
        sigma, t = s.real, abs(s.imag)
        asymptotic = sqrt(2 * pi) * exp((sigma - mpf(1) / 2) * log(t) - pi * t / 2)
        worst_ratio = max(worst_ratio, abs(abs(gamma_s) / asymptotic - 1) * t)
        worst_recurrence = max(worst_recurrence, _relative(gamma_mp(s + 1, digits) - s * gamma_s, s * gamma_s))
        reflection = gamma_s * gamma_mp(1 - s, digits) * sin(pi * s)
        worst_reflection = max(worst_reflection, abs(reflection / pi - 1))

    return [
        _row(VerifySuite.Stirling, "|Gamma| against sqrt(2 pi) t^(sigma - 1/2) e^(-pi t / 2), scaled by t",
             samples, worst_ratio, 1.0),
        _row(VerifySuite.Stirling, "Gamma(s + 1) = s Gamma(s)", samples, worst_recurrence, threshold),
        _row(VerifySuite.Stirling, "Gamma(s) Gamma(1 - s) sin(pi s) = pi", samples, worst_reflection, threshold),
    ]

def run_verification(suite, samples=100, seed=0, digits=40, pairs=10, params=None, t_max=100,
                     window_factor=config.deviation_window_factor):
    '''
    Runs one verification suite and returns a report DataFrame with one row
    per check: suite, check, samples, max_residual, threshold and passed.
    Random draws come from numpy's default_rng(seed), so a fixed seed gives
    an identical report.

    Arguments:
    'suite' -- a VerifySuite or its label.
    'samples' -- random points per parameter pair.
    'seed' -- the random seed.
    'digits' -- working precision for the analytic suites.
    'pairs' -- random parameter pairs for funceq and conjugation.
    'params' -- LerchParams for the counting and theorem1 suites.
    't_max' -- height for the counting and theorem1 suites.
    'window_factor' -- deviation window factor for counting and theorem1.
    '''
    suite = suite if isinstance(suite, VerifySuite) else VerifySuite(suite)
    rng = np.random.default_rng(seed)
    logging.info(f"Running {suite.value} verification ({samples} samples, seed {seed}, {digits} digits)")
    if suite in (VerifySuite.Counting, VerifySuite.Theorem1):
        params = LerchParams.coerce(params or ("1/2", "1/2"))
        policy = PrecisionPolicy(min(digits, config.default_digits))
        window = deviation_window(t_max, window_factor)
        if suite == VerifySuite.Counting:
            result = counting_check(params, t_max, policy)
            rows = [_row(suite, f"N{params} at T = {t_max}: {result.count} zeros, main term {result.main_term:.2f}",
                         1, abs(result.deviation), window)]
        else:
            zeros = scan_zeros(params, ScanConfig(t_max, policy=policy))
            check = theorem1_sum(params, zeros, t_max, window_factor)
            rows = [_row(suite, f"sum of beta - 1/2 for L{params} up to T = {t_max}",
                         len(zeros), abs(check.deviation), window)]
    else:
        with mp.workdps(digits):
            suite_runner = {
                VerifySuite.FuncEq: _funceq,
                VerifySuite.Conjugation: _conjugation,
                VerifySuite.SpecialCases: _special_cases,
                VerifySuite.Stirling: _stirling,
            }[suite]

            rows = suite_runner(rng, samples, digits, pairs)

    return pd.DataFrame(rows, columns=REPORT_COLUMNS)
