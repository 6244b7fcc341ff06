import os
import unittest
from fractions import Fraction
from lerchlib.util.errors import BoundaryZeroError
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import PoleInsideError
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.argumenttracker import count_zeros_rectangle
from lerchlib.zeros.argumenttracker import counting_main_term
from lerchlib.zeros.rectangle import Rectangle

class ArgumentTrackerTest(unittest.TestCase):

    def setUp(self):
        self.policy = PrecisionPolicy(30)

    def test_main_term(self):
        self.assertAlmostEqual(counting_main_term(LerchParams("1/2"), 300), 203.03, places=2)
        self.assertEqual(counting_main_term(LerchParams("1/2"), 0), 0)

    def test_first_riemann_zero(self):
        result = count_zeros_rectangle((1, 1), 0, 1, 14, 15, self.policy)
        self.assertEqual(result.count, 1)
        self.assertAlmostEqual(result.winding, 1, places=1)

    def test_no_riemann_zeros_below_ten(self):
        tracker = ArgumentTracker((1, 1), self.policy)
        self.assertEqual(tracker.count(Rectangle(-1, 2, Fraction(1, 1000), 10)).count, 0)

    def test_zero_free_start(self):
        result = count_zeros_rectangle(("3/4", "3/4"), -1, "1.75", 0, 5, self.policy)
        self.assertEqual(result.count, 0)
        self.assertGreater(result.rectangle.t_lo, 0)

    def test_first_zeros_one_third(self):
        tracker = ArgumentTracker("1/3", self.policy)
        self.assertEqual(tracker.count(Rectangle(-1, Fraction(4, 3), 3, 8)).count, 2)
        self.assertEqual(tracker.count(Rectangle(-1, Fraction(4, 3), 3, 5)).count, 1)

    def test_off_line_zero(self):
        tracker = ArgumentTracker(("1/4", "3/4"), self.policy)
        self.assertEqual(tracker.count(Rectangle(Fraction(3, 4), Fraction(7, 4), 5, 6)).count, 1)
        self.assertEqual(tracker.count(Rectangle(-1, Fraction(3, 4), 5, 6)).count, 0)

    def test_cache_is_shared(self):
        tracker = ArgumentTracker((1, 1), self.policy)
        tracker.count(Rectangle(0, 1, 14, 15))
        evaluations = tracker.evaluations
        tracker.count(Rectangle(0, 1, 14, 15))
        self.assertEqual(tracker.evaluations, evaluations)

    def test_pole(self):
        tracker = ArgumentTracker((1, 1), self.policy)
        box = Rectangle(0, 2, -1, 1)
        self.assertEqual(tracker.count(box).count, 0)
        with self.assertRaises(PoleInsideError):
            tracker.count(box, subtract_pole=False)

        with self.assertRaises(BoundaryZeroError):
            tracker.count(Rectangle(1, 2, -1, 1), nudge=0)

    def test_edge_through_zero_is_nudged(self):
        tracker = ArgumentTracker((1, 1), self.policy)
        # the critical line at the first zero's ordinate, to 30 digits
        top = Fraction("14.134725141734693790457251983562")
        result = tracker.count(Rectangle(0, Fraction(1, 2), 10, top))
        self.assertNotEqual(result.rectangle.t_hi, top)
        self.assertEqual(result.count, 1 if result.rectangle.t_hi > top else 0)

    def test_irrational_rejected(self):
        from mpmath import mpf
        with self.assertRaises(DomainError):
            ArgumentTracker((mpf(2) ** -0.5, "1/2"))

    @unittest.skipUnless(os.environ.get("LERCHLIB_SLOW_TESTS"), "slow")
    def test_count_to_300(self):
        result = count_zeros_rectangle(("1/2", "1/2"), -1, "1.5", 0, 300, self.policy)
        self.assertEqual(result.count, 203)

    def test_zero_free_strips(self):
        tracker = ArgumentTracker(("3/4", "3/4"), self.policy)
        self.assertEqual(tracker.count(Rectangle(-3, -1, 1, 60)).count, 0)
        self.assertEqual(tracker.count(Rectangle(Fraction(7, 4), 3, 0, 60)).count, 0)

    @unittest.skipUnless(os.environ.get("LERCHLIB_SLOW_TESTS"), "slow")
    def test_zero_free_strips_to_300(self):
        for params in (("1/2", "1/2"), ("3/4", "3/4"), ("1/3", "2/3")):
            with self.subTest(params=params):
                tracker = ArgumentTracker(params, self.policy)
                right = 1 + LerchParams(*params).alpha.fraction
                self.assertEqual(tracker.count(Rectangle(-3, -1, 1, 300)).count, 0)
                self.assertEqual(tracker.count(Rectangle(right, 3, 0, 300)).count, 0)
