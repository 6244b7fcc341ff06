import unittest
import numpy as np
from mpmath import mp
from mpmath import mpc
from mpmath import zeta
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch
from lerchlib.lerch.specialcases import SPECIAL_CASES
from lerchlib.lerch.specialcases import special_case_value

class SpecialCasesTest(unittest.TestCase):

    def setUp(self):
        self.policy = PrecisionPolicy(30)

    def test_closed_forms_match_general_evaluator(self):
        rng = np.random.default_rng(5)
        for lambda_, alpha in SPECIAL_CASES:
            for _ in range(5):
                with mp.workdps(30):
                    s = mpc(repr(rng.uniform(-3, 4)), repr(rng.uniform(0.5, 40)))
                    expected = lerch((lambda_, alpha), s, self.policy).value
                    value = special_case_value(lambda_, alpha, s, self.policy).value
                    self.assertLess(abs(value - expected), 1e-22 * max(1, abs(expected)), (lambda_, alpha))

    def test_riemann_zeta(self):
        with mp.workdps(30):
            s = mpc("0.5", "14.134725")
            self.assertLess(abs(special_case_value(1, 1, s, self.policy).value - zeta(s)), 1e-25)

    def test_normalizes_keys(self):
        self.assertEqual(special_case_value("2/4", "1", 3, self.policy),
                         special_case_value("1/2", "1/1", 3, self.policy))

    def test_unknown_pair(self):
        with self.assertRaises(KeyError):
            special_case_value("1/3", "1/3", 2, self.policy)
