import unittest
import numpy as np
from fractions import Fraction
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import conj
from lerchlib.util.errors import DomainError
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch
from lerchlib.lerch.functionalequation import functional_equation_residual
from lerchlib.lerch.functionalequation import functional_equation_rhs
from lerchlib.lerch.functionalequation import functional_split
from lerchlib.lerch.functionalequation import split_residual
from lerchlib.lerch.lerchparams import LerchParams

class FunctionalEquationTest(unittest.TestCase):

    def test_residual(self):
        policy = PrecisionPolicy(40)
        self.assertLess(functional_equation_residual(("1/3", "1/3"), "2+3i", policy), mpf(10) ** -30)
        self.assertLess(functional_equation_residual(("2/3", "1/3"), "1.5+20i", policy), mpf(10) ** -25)

    def test_riemann_zeta_case(self):
        policy = PrecisionPolicy(30)
        with mp.workdps(30):
            value = functional_equation_rhs((1, 1), 2, policy).value
            self.assertLess(abs(value + mpf(1) / 12), 1e-25)

    def test_random_rational_points(self):
        rng = np.random.default_rng(11)
        policy = PrecisionPolicy(30)
        for _ in range(5):
            d = int(rng.integers(1, 7))
            params = LerchParams(Fraction(int(rng.integers(1, d + 1)), d),
                                 Fraction(int(rng.integers(1, d + 1)), d))

            with mp.workdps(30):
                s = mpc(repr(rng.uniform(-1, 2)), repr(rng.uniform(0.5, 40)))
                scale = max(1, abs(lerch(params, 1 - s, policy).value))
                self.assertLess(functional_equation_residual(params, s, policy), 1e-22 * scale, str(params))

    def test_irrational_rejected(self):
        with mp.workdps(30):
            params = LerchParams(mpf(2) ** -0.5)

        with self.assertRaises(DomainError):
            functional_equation_rhs(params, 2)


class FunctionalSplitTest(unittest.TestCase):

    def test_split_residual(self):
        self.assertLess(split_residual("3/4", "2+10i", PrecisionPolicy(50)), mpf(10) ** -30)

    def test_split_reproduces_reflected_value(self):
        policy = PrecisionPolicy(30)
        s = mpc("0.8", "14")
        split = functional_split("1/3", s, policy)
        with mp.workdps(30):
            value = lerch(("1/3", "1/3"), s, policy)
            reflected = conj(lerch(("1/3", "1/3"), 1 - conj(s), policy).value)
            self.assertLess(abs(split.apply(value).value - reflected), 1e-22 * max(1, abs(reflected)))

    def test_lambda_one(self):
        self.assertLess(split_residual(1, "-0.5+7i", PrecisionPolicy(30)), mpf(10) ** -22)

    def test_multiplier_size(self):
        # |G|^2 = 1 / (1 + e^(-2 pi t)) on the half-line
        split = functional_split("1/2", "0.5+30i", PrecisionPolicy(30))
        with mp.workdps(30):
            self.assertAlmostEqual(float(abs(split.g)), 1.0, places=6)
