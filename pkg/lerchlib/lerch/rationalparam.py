from fractions import Fraction
from math import floor
from math import gcd
from mpmath import mpf
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import ParseError

class RationalParam:
    '''
    An exact rational parameter b/d in (0, 1], stored in lowest terms.

    Arguments:
    'num' -- the numerator b, 1 <= b <= d.
    'den' -- the denominator d >= 1, coprime to b.
    '''

    def __init__(self, num, den):
        num, den = int(num), int(den)
        if den < 1 or not 1 <= num <= den:
            raise DomainError(f"rational parameter {num}/{den} is not in (0, 1]")

        if gcd(num, den) != 1:
            raise DomainError(f"rational parameter {num}/{den} is not in lowest terms")

        self._num = num
        self._den = den

    @classmethod
    def from_fraction(cls, value):
        '''Builds a parameter from a Fraction (or int) already in (0, 1].'''
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def wrapped(cls, value):
        '''
        Reduces any rational modulo 1 into (0, 1], mapping integers to 1.
        Used where only e(value * m) matters, for example 1 - lambda.
        '''
        value = Fraction(value)
        value -= floor(value)
        if value == 0:
            value = Fraction(1)

        return cls.from_fraction(value)

    @classmethod
    def parse(cls, text):
        '''Parses "b/d" or an integer string; the result is reduced to lowest terms.'''
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot parse rational parameter '{text}'")

        if "." in str(text) or "e" in str(text).lower():
            raise ParseError(f"rational parameter '{text}' must be written as b/d")

        if not 0 < value <= 1:
            raise ParseError(f"rational parameter '{text}' is not in (0, 1]")

        return cls.from_fraction(value)

    @property
    def num(self):
        '''Gets the numerator b.'''
        return self._num

    @property
    def den(self):
        '''Gets the denominator d.'''
        return self._den

    @property
    def fraction(self):
        '''Gets the value as an exact Fraction.'''
        return Fraction(self._num, self._den)

    @property
    def fractional_part(self):
        '''Gets {b/d}: the value itself below 1, and 0 for 1.'''
        return self.fraction if self._num < self._den else Fraction(0)

    @property
    def is_one(self):
        return self._num == self._den

    def complement(self):
        '''Gets 1 - b/d wrapped into (0, 1].'''
        return RationalParam.wrapped(1 - self.fraction)

    def to_mpf(self):
        return mpf(self._num) / self._den

    def __eq__(self, other):
        if not isinstance(other, RationalParam):
            return NotImplemented

        return self._num == other.num and self._den == other.den

    def __hash__(self):
        return hash((self._num, self._den))

    def __str__(self):
        return f"{self._num}/{self._den}"

    def __repr__(self):
        return f"RationalParam({self._num}, {self._den})"
