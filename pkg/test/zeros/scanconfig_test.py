import unittest
from fractions import Fraction
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.scanconfig import ScanConfig

class ScanConfigTest(unittest.TestCase):

    def test_defaults(self):
        scan_config = ScanConfig(300)
        self.assertEqual(scan_config.t_max, 300)
        self.assertEqual(scan_config.sigma_lo, -1)
        self.assertIsNone(scan_config.sigma_hi)
        self.assertEqual(scan_config.t_start, config.boundary_nudge)
        self.assertEqual(scan_config.workers, config.pool_workers)

    def test_for_params(self):
        scan_config = ScanConfig(10).for_params(LerchParams("3/4"))
        self.assertEqual(scan_config.sigma_hi, Fraction(7, 4))
        self.assertEqual(ScanConfig(10, sigma_hi=2).for_params(LerchParams("3/4")).sigma_hi, 2)

    def test_doubled_and_range(self):
        scan_config = ScanConfig(10, workers=1).doubled().doubled()
        self.assertEqual(scan_config.density_scale, 4)
        self.assertEqual(scan_config.workers, 1)

        moved = scan_config.with_range(5, 20)
        self.assertEqual((moved.t_min, moved.t_max, moved.t_start), (5, 20, 5))
        self.assertEqual(moved.density_scale, 4)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            ScanConfig(5, t_min=6)

        with self.assertRaises(DomainError):
            ScanConfig(5, sigma_lo=2, sigma_hi=1)
