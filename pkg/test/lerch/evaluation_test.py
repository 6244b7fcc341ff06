import unittest
import numpy as np
from fractions import Fraction
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import catalan
from mpmath import conj
from mpmath import diff
from mpmath import expjpi
from mpmath import log
from mpmath import pi
from mpmath import sqrt
from mpmath import zeta
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import PoleError
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch
from lerchlib.lerch.evaluation import lerch_deriv
from lerchlib.lerch.evaluation import lerch_rational
from lerchlib.lerch.evaluation import lerch_series
from lerchlib.lerch.evaluation import lerch_with_bound
from lerchlib.lerch.evaluation import unit_root
from lerchlib.lerch.lerchparams import LerchParams

def decomposition(lambda_, alpha, s):
    # Reference value built on mpmath's own Hurwitz zeta.
    lambda_, alpha = Fraction(lambda_), Fraction(alpha)
    b, d = lambda_.numerator, lambda_.denominator
    total = sum(expjpi(mpf(2 * b * k) / d) * zeta(s, (k + mpf(alpha.numerator) / alpha.denominator) / d)
                for k in range(d))

    return d ** -s * total


class LerchEvaluationTest(unittest.TestCase):

    def setUp(self):
        self.policy = PrecisionPolicy(30)

    def assertClose(self, value, expected, tolerance=1e-24):
        with mp.workdps(30):
            value = getattr(value, "value", value)
            self.assertLess(abs(value - expected), tolerance * max(1, abs(expected)))

    def test_riemann_zeta_reduction(self):
        with mp.workdps(30):
            self.assertClose(lerch((1, 1), -1, self.policy), mpf(-1) / 12)
            self.assertClose(lerch((1, 1), 2, self.policy), pi ** 2 / 6)

    def test_catalan(self):
        with mp.workdps(30):
            value = lerch_rational(("1/2", "1/2"), 2, self.policy)
            self.assertClose(value, 4 * catalan)
            self.assertEqual(mp.nstr(value.re, 11), "3.6638623767")

    def test_series_values(self):
        with mp.workdps(30):
            self.assertClose(lerch_series((1, 1), 2, self.policy), pi ** 2 / 6)
            self.assertClose(lerch_series(("1/2", 1), 2, self.policy), pi ** 2 / 12)

    def test_rational_agrees_with_series(self):
        with mp.workdps(30):
            self.assertClose(lerch_rational(("1/3", "1/3"), 3, self.policy),
                             lerch_series(("1/3", "1/3"), 3, self.policy).value)

        rng = np.random.default_rng(3)
        for _ in range(5):
            d = int(rng.integers(2, 9))
            lam = Fraction(int(rng.integers(1, d + 1)), d)
            alpha = Fraction(int(rng.integers(1, d + 1)), d)
            with mp.workdps(30):
                s = mpc(repr(rng.uniform(1.2, 4)), repr(rng.uniform(-50, 50)))
                series = lerch_series((lam, alpha), s, self.policy).value
                self.assertClose(lerch_rational((lam, alpha), s, self.policy), series, 1e-22)

    def test_against_decomposition_oracle(self):
        cases = (("1/3", "1/3", "-1.5+20i"), ("2/3", "1/3", "0.5+14i"),
                 ("1/4", "3/4", "-4+2i"), ("5/7", "2/7", "0.8+35i"))

        for lam, alpha, s in cases:
            with mp.workdps(30):
                value = lerch((lam, alpha), s, self.policy)
                self.assertClose(value, decomposition(lam, alpha, HPComplex.parse(s, 30).value))

    def test_zero_of_dirichlet_beta(self):
        with mp.workdps(30):
            value = lerch(("1/2", "1/2"), "0.5+6.0209489046975965i", self.policy)
            self.assertLess(abs(value), 1e-12)

    def test_conjugation(self):
        with mp.workdps(30):
            s = mpc("0.3", "11.5")
            value = lerch(("1/5", "2/5"), s, self.policy).value
            mirror = lerch(("4/5", "2/5"), conj(s), self.policy).value
            self.assertClose(conj(value), mirror)

            value = lerch((1, "2/5"), s, self.policy).value
            self.assertClose(conj(value), lerch((1, "2/5"), conj(s), self.policy).value)

    def test_regularized_at_one(self):
        with mp.workdps(30):
            self.assertClose(lerch(("1/2", 1), 1, self.policy), log(2))
            self.assertClose(lerch(("1/2", "1/2"), 1, self.policy), pi / 2)

        with self.assertRaises(PoleError):
            lerch((1, "1/3"), 1, self.policy)

    def test_irrational_series(self):
        with mp.workdps(30):
            lam = 1 / sqrt(2)
            params = LerchParams(lam, "1/2")
            value = lerch(params, 3, self.policy)
            direct = sum(unit_root(lam * m) * (m + mpf("0.5")) ** -3 for m in range(20000))
            self.assertLess(abs(value.value - direct), 1e-11)

            finer = lerch(params, 3, PrecisionPolicy(40))
            self.assertLess(abs(value.value - finer.value), self.policy.target_error)

    def test_irrational_outside_series_region(self):
        with mp.workdps(30):
            params = LerchParams(1 / sqrt(2), "1/2")

        with self.assertRaises(DomainError):
            lerch(params, "1.05+3i", self.policy)

        with self.assertRaises(DomainError):
            lerch_rational(params, 3, self.policy)

    def test_derivative(self):
        with mp.workdps(30):
            s = mpc("0.4", "9")
            expected = diff(lambda z: decomposition("1/3", "2/3", z), s)
            self.assertClose(lerch_deriv(("1/3", "2/3"), s, self.policy), expected, 1e-20)

    def test_bound_reported(self):
        value, bound = lerch_with_bound(("3/4", "3/4"), "0.5+20i", self.policy)
        self.assertLess(bound, self.policy.target_error)
        self.assertEqual(value.precision, 30)

    def test_unit_root_reduces_exactly(self):
        with mp.workdps(30):
            self.assertLess(abs(unit_root(Fraction(10 ** 20 + 1, 4)) - mpc(0, 1)), 1e-29)
            self.assertLess(abs(unit_root(-Fraction(1, 2)) + 1), 1e-29)
