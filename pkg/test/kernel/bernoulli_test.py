import unittest
from fractions import Fraction
from math import comb
from lerchlib.util import config
from lerchlib.util.errors import CapExceeded
from lerchlib.kernel.bernoulli import bernoulli_even
from lerchlib.kernel.bernoulli import bernoulli_numbers

class BernoulliTest(unittest.TestCase):

    def test_known_values(self):
        numbers = bernoulli_numbers(6)
        self.assertEqual(len(numbers), 13)
        self.assertEqual(numbers[0], 1)
        self.assertEqual(numbers[1], Fraction(-1, 2))
        self.assertEqual(numbers[2], Fraction(1, 6))
        self.assertEqual(numbers[4], Fraction(-1, 30))
        self.assertEqual(numbers[6], Fraction(1, 42))
        self.assertEqual(numbers[12], Fraction(-691, 2730))
        self.assertTrue(all(numbers[n] == 0 for n in range(3, 13, 2)))

    def test_defining_recurrence(self):
        numbers = bernoulli_numbers(15)
        for n in range(1, 31):
            self.assertEqual(sum(comb(n + 1, k) * numbers[k] for k in range(n + 1)), 0, n)

    def test_even_lookup(self):
        self.assertEqual(bernoulli_even(1), Fraction(1, 6))
        self.assertEqual(bernoulli_even(7), Fraction(7, 6))

    def test_cap(self):
        with self.assertRaises(CapExceeded):
            bernoulli_numbers(config.bernoulli_cap + 1)
