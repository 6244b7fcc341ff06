from fractions import Fraction
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import nstr
from mpmath import isfinite
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import NumericalError
from lerchlib.util.errors import ParseError

def to_mpf(x):
    '''Converts an int, Fraction, decimal string or mpmath number to an mpf at the current precision.'''
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator

    return mpf(x)

def to_fraction(x, digits=20):
    '''
    Converts a real number to an exact Fraction. Floats and mpf values are
    rounded to the given number of significant digits first so that the
    result has a short decimal expansion.
    '''
    if isinstance(x, Fraction):
        return x

    if isinstance(x, int):
        return Fraction(x)

    if isinstance(x, str):
        return Fraction(x)

    return Fraction(nstr(mpf(x), digits))

def _split_complex_string(text):
    text = text.strip().replace(" ", "").replace("j", "i")
    if not text:
        raise ParseError("empty complex number")

    if not text.endswith("i"):
        return text, "0"

    body = text[:-1]
    split_at = None
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            split_at = i
            break

    if split_at is None:
        re_part, im_part = "0", body
    else:
        re_part, im_part = body[:split_at], body[split_at:]

    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"

    return re_part, im_part


class HPComplex:
    '''
    An immutable arbitrary-precision complex number carrying the decimal
    precision it was computed at. Arithmetic between two values runs at the
    smaller of their precisions.

    Arguments:
    're' -- real part: int, Fraction, decimal string or mpmath number.
    'im' -- imaginary part, same types as 're'.
    'precision' -- working precision in decimal digits, at least 15.
    '''

    def __init__(self, re, im=0, precision=None):
        precision = int(precision or config.default_digits)
        if precision < 15:
            raise DomainError(f"precision must be at least 15 digits, got {precision}")

        with mp.workdps(precision):
            self._re = to_mpf(re)
            self._im = to_mpf(im)

        if not (isfinite(self._re) and isfinite(self._im)):
            raise NumericalError(f"non-finite complex value ({self._re}, {self._im})")

        self._precision = precision

    @classmethod
    def from_mpc(cls, z, precision):
        '''Wraps an mpmath number computed at the given precision.'''
        z = mpc(z)
        return cls(z.real, z.imag, precision)

    @classmethod
    def parse(cls, text, precision=None):
        '''
        Parses strings such as "2", "0.5+9.69i", "-1-3i" or "2.5e-3i". Both
        "i" and "j" are accepted for the imaginary unit.
        '''
        re_part, im_part = _split_complex_string(str(text))
        try:
            with mp.workdps(int(precision or config.default_digits)):
                return cls(mpf(re_part), mpf(im_part), precision)
        except ValueError:
            raise ParseError(f"cannot parse complex number '{text}'")

    @classmethod
    def coerce(cls, value, precision=None):
        '''Converts numbers, strings and mpmath values to an HPComplex at the given precision.'''
        if isinstance(value, HPComplex):
            if precision is None or precision == value.precision:
                return value

            return cls(value.re, value.im, precision)

        if isinstance(value, str):
            return cls.parse(value, precision)

        if isinstance(value, (complex, mpc)):
            return cls(value.real, value.imag, precision)

        return cls(value, 0, precision)

    @property
    def re(self):
        '''Gets the real part.'''
        return self._re

    @property
    def im(self):
        '''Gets the imaginary part.'''
        return self._im

    @property
    def precision(self):
        '''Gets the precision in decimal digits.'''
        return self._precision

    @property
    def value(self):
        '''Gets the value as an mpmath mpc.'''
        with mp.workdps(self._precision):
            return mpc(self._re, self._im)

    def conjugate(self):
        return HPComplex(self._re, -self._im, self._precision)

    def __abs__(self):
        with mp.workdps(self._precision):
            return abs(mpc(self._re, self._im))

    def _binary(self, other, op):
        other = other if isinstance(other, HPComplex) else HPComplex.coerce(other, self._precision)
        precision = min(self._precision, other.precision)
        with mp.workdps(precision):
            return HPComplex.from_mpc(op(self.value, other.value), precision)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        other = other if isinstance(other, HPComplex) else HPComplex.coerce(other, self._precision)
        if other.re == 0 and other.im == 0:
            raise NumericalError("division by zero")

        return self._binary(other, lambda a, b: a / b)

    def __neg__(self):
        return HPComplex(-self._re, -self._im, self._precision)

    def __eq__(self, other):
        if not isinstance(other, HPComplex):
            return NotImplemented

        return self._re == other.re and self._im == other.im

    def __hash__(self):
        return hash((self._re, self._im))

    def to_string(self, digits=None):
        '''Formats the value with the given number of significant digits.'''
        digits = digits or self._precision
        with mp.workdps(self._precision):
            return nstr(self.value, digits)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"HPComplex({nstr(self._re, 15)}, {nstr(self._im, 15)}, precision={self._precision})"
