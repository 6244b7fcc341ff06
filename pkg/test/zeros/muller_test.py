import unittest
from fractions import Fraction
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from lerchlib.util.errors import DriftError
from lerchlib.util.errors import NonConvergence
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.muller import certify_isolation
from lerchlib.zeros.muller import muller_iterate
from lerchlib.zeros.muller import refine_zero
from lerchlib.zeros.rectangle import Rectangle
from lerchlib.zeros.zerorecord import Method

FIRST_ZETA_ZERO = "14.134725141734693790457251983562"

class MullerTest(unittest.TestCase):

    def setUp(self):
        self.policy = PrecisionPolicy(30)

    def test_polynomial(self):
        with mp.workdps(30):
            root = muller_iterate(lambda z: z ** 2 + 1, mpc(0.1, 0.8), mpc(0.2, 1.1), mpc(0, 0.9), mpf(10) ** -25)
            self.assertLess(abs(root - mpc(0, 1)), 1e-24)

    def test_iteration_cap(self):
        with mp.workdps(30):
            with self.assertRaises(NonConvergence):
                muller_iterate(lambda z: mp.exp(z), mpc(0), mpc(1), mpc(2), mpf(10) ** -25, max_iter=5)

    def test_first_riemann_zero(self):
        zero = refine_zero((1, 1), "0.5+14.1i", self.policy)
        with mp.workdps(30):
            self.assertLess(abs(zero.beta - mpf("0.5")), 1e-20)
            self.assertLess(abs(zero.gamma_t - mpf(FIRST_ZETA_ZERO)), 1e-20)

        self.assertLess(zero.residual, self.policy.half_digits_tolerance)
        self.assertGreater(zero.radius_bound, 0)
        self.assertEqual(zero.method, Method.Muller)
        self.assertEqual(zero.precision, 30)

    def test_box_certificate(self):
        box = Rectangle(0, 1, 14, 15)
        zero = refine_zero((1, 1), box.center_mpc(), self.policy, box=box, box_count=1)
        with mp.workdps(30):
            self.assertAlmostEqual(zero.radius_bound, float(mpf(FIRST_ZETA_ZERO) - 14), places=6)

    def test_off_line_zero(self):
        zero = refine_zero(("1/4", "3/4"), "1+5.2i", self.policy)
        self.assertAlmostEqual(float(zero.beta), 1.03, delta=0.011)
        self.assertAlmostEqual(float(zero.gamma_t), 5.24, delta=0.011)

    def test_drift(self):
        with self.assertRaises(DriftError):
            refine_zero((1, 1), "0.5+14i", self.policy, max_drift=0.01)

        with self.assertRaises(DriftError):
            refine_zero((1, 1), "0.5+14.1i", self.policy, box=Rectangle(0, 1, 13, 14), box_count=1)

    def test_certify_isolation(self):
        tracker = ArgumentTracker((1, 1), self.policy)
        with mp.workdps(30):
            rho = mpc("0.5", FIRST_ZETA_ZERO)

        radius = certify_isolation(tracker, rho, start_radius=Fraction(1, 10))
        self.assertGreater(radius, 0.09)
        self.assertLessEqual(radius, 0.1)
