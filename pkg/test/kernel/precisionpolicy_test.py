import unittest
from mpmath import mp
from mpmath import mpf
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import PrecisionError
from lerchlib.kernel.precisionpolicy import PrecisionPolicy

class PrecisionPolicyTest(unittest.TestCase):

    def test_target_error(self):
        policy = PrecisionPolicy(30, 5)
        with mp.workdps(30):
            self.assertEqual(policy.target_error, mpf(10) ** -25)
            self.assertEqual(policy.half_digits_tolerance, mpf(10) ** -15)

    def test_default(self):
        policy = PrecisionPolicy.default()
        self.assertEqual(policy.working_digits, config.default_digits)
        self.assertEqual(policy.guard_digits, config.guard_digits)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            PrecisionPolicy(30, 4)

        with self.assertRaises(DomainError):
            PrecisionPolicy(10)

        with self.assertRaises(PrecisionError):
            PrecisionPolicy(config.max_digits + 1)

    def test_context(self):
        policy = PrecisionPolicy(45)
        with policy.context():
            self.assertEqual(mp.dps, 45)

    def test_with_digits(self):
        policy = PrecisionPolicy(30, 7).with_digits(60)
        self.assertEqual(policy, PrecisionPolicy(60, 7))
