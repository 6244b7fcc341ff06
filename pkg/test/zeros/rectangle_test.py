import unittest
from fractions import Fraction
from mpmath import mpc
from lerchlib.util.errors import DomainError
from lerchlib.zeros.rectangle import Rectangle

class RectangleTest(unittest.TestCase):

    def setUp(self):
        self.box = Rectangle(-1, "1.5", 0, 4)

    def test_exact_corners(self):
        self.assertEqual(self.box.sigma_hi, Fraction(3, 2))
        self.assertEqual(self.box.corners()[2], (Fraction(3, 2), Fraction(4)))
        self.assertEqual([name for name, _, _ in self.box.edges()], ["bottom", "right", "top", "left"])
        self.assertEqual(self.box.edges()[3][2], (Fraction(-1), Fraction(0)))

    def test_degenerate(self):
        with self.assertRaises(DomainError):
            Rectangle(1, 1, 0, 2)

        with self.assertRaises(DomainError):
            Rectangle(0, 1, 3, 2)

    def test_square(self):
        square = Rectangle.square("0.5", 10, Fraction(1, 20))
        self.assertEqual(square, Rectangle("0.45", "0.55", "9.95", "10.05"))
        self.assertEqual(square.center, (Fraction(1, 2), Fraction(10)))

    def test_split_cuts_longer_side(self):
        lower, upper = self.box.split()
        self.assertEqual(lower, Rectangle(-1, "1.5", 0, 2))
        self.assertEqual(upper, Rectangle(-1, "1.5", 2, 4))

        left, right = Rectangle(0, 4, 0, 1).split(Fraction(1, 4))
        self.assertEqual(left.sigma_hi, 1)
        self.assertEqual(right.sigma_lo, 1)

    def test_containment(self):
        self.assertTrue(self.box.contains(mpc(1.5, 2)))
        self.assertFalse(self.box.contains(mpc(1.6, 2)))
        self.assertTrue(self.box.contains_strictly(1, 2))
        self.assertFalse(self.box.contains_strictly(Fraction(3, 2), 2))

    def test_edge_through(self):
        self.assertEqual(self.box.edge_through(1, 0), "bottom")
        self.assertEqual(self.box.edge_through(Fraction(3, 2), 1), "right")
        self.assertEqual(self.box.edge_through(-1, 1), "left")
        self.assertEqual(self.box.edge_through(0, 4), "top")
        self.assertIsNone(self.box.edge_through(0, 1))

    def test_nudged(self):
        self.assertEqual(self.box.nudged("left", Fraction(1, 100)).sigma_lo, Fraction(-101, 100))
        self.assertEqual(self.box.nudged("top", Fraction(1, 100)).t_hi, Fraction(401, 100))
        with self.assertRaises(ValueError):
            self.box.nudged("middle", 1)
