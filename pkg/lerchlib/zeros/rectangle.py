from fractions import Fraction
from mpmath import mpc
from lerchlib.util.errors import DomainError
from lerchlib.kernel.hpcomplex import to_fraction
from lerchlib.kernel.hpcomplex import to_mpf

class Rectangle:
    '''
    An axis-aligned box [sigma_lo, sigma_hi] x [t_lo, t_hi] with exact
    rational corners, so that edges shared by neighbouring boxes sample
    the same points.
    '''

    # Edge names in counter-clockwise order.
    EDGES = ("bottom", "right", "top", "left")

    def __init__(self, sigma_lo, sigma_hi, t_lo, t_hi):
        self._sigma_lo = to_fraction(sigma_lo)
        self._sigma_hi = to_fraction(sigma_hi)
        self._t_lo = to_fraction(t_lo)
        self._t_hi = to_fraction(t_hi)
        if self._sigma_lo >= self._sigma_hi or self._t_lo >= self._t_hi:
            raise DomainError(f"degenerate rectangle {self}")

    @classmethod
    def square(cls, center_sigma, center_t, half_width):
        '''A square of the given half-width around an exact centre.'''
        half_width = to_fraction(half_width)
        center_sigma = to_fraction(center_sigma)
        center_t = to_fraction(center_t)
        return cls(center_sigma - half_width, center_sigma + half_width,
                   center_t - half_width, center_t + half_width)

    @property
    def sigma_lo(self):
        return self._sigma_lo

    @property
    def sigma_hi(self):
        return self._sigma_hi

    @property
    def t_lo(self):
        return self._t_lo

    @property
    def t_hi(self):
        return self._t_hi

    @property
    def width(self):
        return self._sigma_hi - self._sigma_lo

    @property
    def height(self):
        return self._t_hi - self._t_lo

    @property
    def center(self):
        '''Gets the centre as an exact (sigma, t) pair.'''
        return (self._sigma_lo + self._sigma_hi) / 2, (self._t_lo + self._t_hi) / 2

    def center_mpc(self):
        sigma, t = self.center
        return mpc(to_mpf(sigma), to_mpf(t))

    def corners(self):
        '''Gets the corners as exact pairs, counter-clockwise from the bottom left.'''
        return [(self._sigma_lo, self._t_lo), (self._sigma_hi, self._t_lo),
                (self._sigma_hi, self._t_hi), (self._sigma_lo, self._t_hi)]

    def edges(self):
        '''Gets (name, start, end) for each edge, counter-clockwise.'''
        corners = self.corners()
        return [(name, corners[i], corners[(i + 1) % 4]) for i, name in enumerate(self.EDGES)]

    def contains(self, z):
        '''Checks whether a complex point lies in the closed box.'''
        return (to_mpf(self._sigma_lo) <= z.real <= to_mpf(self._sigma_hi)
                and to_mpf(self._t_lo) <= z.imag <= to_mpf(self._t_hi))

    def contains_strictly(self, sigma, t):
        '''Checks whether an exact point lies in the open box.'''
        return self._sigma_lo < sigma < self._sigma_hi and self._t_lo < t < self._t_hi

    def edge_through(self, sigma, t):
        '''Gets the name of an edge passing through an exact point, or None.'''
        on_sigma = self._sigma_lo <= sigma <= self._sigma_hi
        on_t = self._t_lo <= t <= self._t_hi
        if on_sigma and t == self._t_lo:
            return "bottom"

        if on_sigma and t == self._t_hi:
            return "top"

        if on_t and sigma == self._sigma_hi:
            return "right"

        if on_t and sigma == self._sigma_lo:
            return "left"

        return None

    def nudged(self, edge, amount):
        '''Gets a copy with one edge moved outward by the given amount.'''
        amount = Fraction(amount)
        sigma_lo, sigma_hi, t_lo, t_hi = self._sigma_lo, self._sigma_hi, self._t_lo, self._t_hi
        if edge == "bottom":
            t_lo -= amount
        elif edge == "top":
            t_hi += amount
        elif edge == "left":
            sigma_lo -= amount
        elif edge == "right":
            sigma_hi += amount
        else:
            raise ValueError(f"unknown edge '{edge}'")

        return Rectangle(sigma_lo, sigma_hi, t_lo, t_hi)

    def split(self, ratio=Fraction(1, 2)):
        '''
        Cuts the box across its longer side, with the first part taking the
        given share of that side. Returns the (lower or left, upper or right) pair.
        '''
        ratio = Fraction(ratio)
        if self.height >= self.width:
            cut = self._t_lo + self.height * ratio
            return (Rectangle(self._sigma_lo, self._sigma_hi, self._t_lo, cut),
                    Rectangle(self._sigma_lo, self._sigma_hi, cut, self._t_hi))

        cut = self._sigma_lo + self.width * ratio
        return (Rectangle(self._sigma_lo, cut, self._t_lo, self._t_hi),
                Rectangle(cut, self._sigma_hi, self._t_lo, self._t_hi))

    def __eq__(self, other):
        if not isinstance(other, Rectangle):
            return NotImplemented

        return (self._sigma_lo, self._sigma_hi, self._t_lo, self._t_hi) == (
            other.sigma_lo, other.sigma_hi, other.t_lo, other.t_hi)

    def __hash__(self):
        return hash((self._sigma_lo, self._sigma_hi, self._t_lo, self._t_hi))

    def __repr__(self):
        return (f"Rectangle([{float(self._sigma_lo)}, {float(self._sigma_hi)}] x "
                f"[{float(self._t_lo)}, {float(self._t_hi)}])")
