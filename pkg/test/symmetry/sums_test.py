import os
import unittest
from math import log
from math import pi
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.scripts.lerchtable import load_table_lambdas
from lerchlib.symmetry.sums import counting_check
from lerchlib.symmetry.sums import deviation_window
from lerchlib.symmetry.sums import theorem1_sum
from lerchlib.zeros.scanconfig import ScanConfig
from lerchlib.zeros.scanner import scan_zeros
from lerchlib.zeros.zerorecord import ZeroRecord

class SumsTest(unittest.TestCase):

    def test_equal_parameters(self):
        zeros = [ZeroRecord("0.5", 10, 0, 0.01), ZeroRecord("0.37", 20, 0, 0.01),
                 ZeroRecord("0.63", 20, 0, 0.01), ZeroRecord("0.8", 40, 0, 0.01)]

        check = theorem1_sum(("3/4", "3/4"), zeros, 30)
        self.assertEqual(check.main_term, 0)
        self.assertAlmostEqual(check.computed_sum, 0)
        self.assertAlmostEqual(check.window, 8 * log(30))
        self.assertTrue(check.within)

    def test_unequal_parameters(self):
        check = theorem1_sum(("1/3", "2/3"), [ZeroRecord("0.86", "5.68", 0, 0.01)], 100)
        self.assertAlmostEqual(check.main_term, 100 / (4 * pi) * log(2))
        self.assertAlmostEqual(check.deviation, 0.36 - 100 / (4 * pi) * log(2))

    def test_window(self):
        self.assertAlmostEqual(deviation_window(300), 8 * log(300))
        self.assertAlmostEqual(deviation_window(300, 2), 2 * log(300))

    def test_counting_check(self):
        result = counting_check((1, 1), 20, PrecisionPolicy(30))
        self.assertEqual(result.count, 1)
        self.assertTrue(result.within(deviation_window(20)))

        result = counting_check(("1/3", "1/3"), 10, PrecisionPolicy(30))
        self.assertEqual(result.count, 3)

    def test_scanned_sum(self):
        policy = PrecisionPolicy(30)
        zeros = scan_zeros(("1/3", "1/3"), ScanConfig(13, policy=policy, workers=1))
        check = theorem1_sum(("1/3", "1/3"), zeros, 13)
        self.assertEqual(len(zeros), 4)
        self.assertTrue(check.within)

    @unittest.skipUnless(os.environ.get("LERCHLIB_SLOW_TESTS"), "slow")
    def test_counting_to_300(self):
        policy = PrecisionPolicy(30)
        for lambda_ in load_table_lambdas(os.path.join("files", "lerchtable", "lambdas.json")):
            with self.subTest(lambda_=str(lambda_)):
                result = counting_check((lambda_, lambda_), 300, policy)
                self.assertTrue(result.within(deviation_window(300)))

    @unittest.skipUnless(os.environ.get("LERCHLIB_SLOW_TESTS"), "slow")
    def test_equal_parameter_sums_to_300(self):
        policy = PrecisionPolicy(30)
        for lambda_ in ("1/2", "2/3", "3/4", "7/8"):
            with self.subTest(lambda_=lambda_):
                zeros = scan_zeros((lambda_, lambda_), ScanConfig(300, policy=policy))
                check = theorem1_sum((lambda_, lambda_), zeros, 300)
                self.assertLessEqual(abs(check.computed_sum), 8 * log(300))
                self.assertTrue(check.within)

    @unittest.skipUnless(os.environ.get("LERCHLIB_SLOW_TESTS"), "slow")
    def test_unequal_parameter_sum_to_300(self):
        zeros = scan_zeros(("1/3", "2/3"), ScanConfig(300, policy=PrecisionPolicy(30)))
        check = theorem1_sum(("1/3", "2/3"), zeros, 300)
        self.assertAlmostEqual(check.main_term, 300 / (4 * pi) * log(2))
        self.assertLessEqual(abs(check.deviation), 8 * log(300))
