import logging
from fractions import Fraction
from math import ceil
from math import e
from math import floor
from math import log as flog
from math import log2
from math import pi as fpi
from mpmath import mpf
from mpmath import mpc
from mpmath import arg
from lerchlib.util import config
from lerchlib.util.errors import BoundaryZeroError
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import NonConvergence
from lerchlib.util.errors import PoleInsideError
from lerchlib.kernel.hpcomplex import to_mpf
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_mp
from lerchlib.lerch.growth import growth_bound_mu
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.rectangle import Rectangle

def counting_main_term(params, t):
    '''
    The main term (T / 2 pi) log(T / (2 pi e alpha lambda)) of the number of
    zeros with 0 < gamma < T; zero for T <= 0.
    '''
    t = float(t)
    if t <= 0:
        return 0.0

    return t / (2 * fpi) * flog(t / (2 * fpi * e * params.product()))


class CountResult:
    '''
    The certified number of zeros in a rectangle.

    Arguments:
    'count' -- the number of zeros, counted with multiplicity.
    'main_term' -- the counting main term between the rectangle's ordinates.
    'rectangle' -- the rectangle actually traced, after any nudges.
    'winding' -- the total change of arg L / 2 pi before rounding.
    '''

    def __init__(self, count, main_term, rectangle, winding):
        self._count = count
        self._main_term = main_term
        self._rectangle = rectangle
        self._winding = winding

    @property
    def count(self):
        '''Gets the number of zeros.'''
        return self._count

    @property
    def main_term(self):
        '''Gets the counting main term.'''
        return self._main_term

    @property
    def deviation(self):
        '''Gets count - main_term.'''
        return self._count - self._main_term

    @property
    def rectangle(self):
        return self._rectangle

    @property
    def winding(self):
        return self._winding

    def within(self, window):
        '''Checks |count - main_term| <= window.'''
        return abs(self.deviation) <= window

    def __repr__(self):
        return f"CountResult(count={self._count}, main_term={self._main_term:.3f}, rectangle={self._rectangle})"


class ArgumentTracker:
    '''
    Counts zeros of L(lambda, alpha, s) inside rectangles by following the
    continuous argument of L along their boundaries. Values are cached by
    exact point, and edges are sampled on dyadic grids, so neighbouring
    and nested rectangles share evaluations.

    Arguments:
    'params' -- rational LerchParams.
    'policy' -- PrecisionPolicy for the evaluations.
    'step_density' -- fixed sample points per unit length; None picks four
        points per expected zero spacing, scaled by 1 + mu(sigma).
    'density_scale' -- multiplier on the sampling density.
    'max_arg_step' -- largest change of argument accepted between samples.
    'min_step' -- edge length below which a segment is taken to pass
        through a zero.
    '''

    def __init__(self, params, policy=None, step_density=None, density_scale=1,
                 max_arg_step=config.max_arg_step, min_step=config.min_edge_step, max_refinements=4):
        self._params = LerchParams.coerce(params)
        if not self._params.is_rational:
            raise DomainError("zero counting needs rational parameters")

        self._policy = policy or PrecisionPolicy.default()
        self._step_density = step_density
        self._density_scale = density_scale
        self._max_arg_step = max_arg_step
        self._min_step = Fraction(min_step)
        self._max_refinements = max_refinements
        with self._policy.context():
            self._zero_threshold = mpf(10) ** (-(self._policy.working_digits // 2))

        self._cache = {}

    @property
    def params(self):
        return self._params

    @property
    def policy(self):
        return self._policy

    @property
    def evaluations(self):
        '''Gets the number of distinct points evaluated so far.'''
        return len(self._cache)

    def value_at(self, sigma, t):
        '''L at the exact point sigma + i t, from the cache when possible.'''
        key = (sigma, t)
        value = self._cache.get(key)
        if value is None:
            with self._policy.context():
                z = mpc(to_mpf(sigma), to_mpf(t))
                value = lerch_mp(self._params, z, self._policy.working_digits)[0]

            self._cache[key] = value

        return value

    def _grid_step(self, sigma, t):
        if self._step_density:
            density = float(self._step_density)
        else:
            # Heights are rounded up to a power of two so nested boxes agree.
            height = 2.0 ** ceil(log2(max(float(t), 1.0)))
            spacing = 2 * fpi / max(1.0, flog(height / (2 * fpi * self._params.product())))
            density = 4 / spacing

        sigma0 = min(-2, floor(sigma))
        density *= (1 + float(growth_bound_mu(self._params.lambda_, self._params.alpha, sigma, sigma0)))
        density *= self._density_scale
        return Fraction(1, 2 ** max(0, ceil(log2(density))))

    def _edge_points(self, start, end, refinement):
        (s0, t0), (s1, t1) = start, end
        horizontal = t0 == t1
        lo, hi = (min(s0, s1), max(s0, s1)) if horizontal else (min(t0, t1), max(t0, t1))
        if horizontal:
            step = self._grid_step(lo, t0)
        else:
            step = self._grid_step(s0, hi)

        step /= 2 ** refinement
        first = floor(lo / step) + 1
        last = ceil(hi / step) - 1
        coordinates = [lo] + [k * step for k in range(first, last + 1)] + [hi]
        if (s1 < s0) if horizontal else (t1 < t0):
            coordinates.reverse()

        return [(c, t0) if horizontal else (s0, c) for c in coordinates]

    def _segment_change(self, a, b, edge):
        total = 0.0
        stack = [(a, b)]
        while stack:
            p, q = stack.pop()
            fp, fq = self.value_at(*p), self.value_at(*q)
            if abs(fp) < self._zero_threshold or abs(fq) < self._zero_threshold:
                raise BoundaryZeroError(f"L vanishes to working precision on the {edge} edge", edge=edge)

            with self._policy.context():
                delta = float(arg(fq / fp))

            if abs(delta) <= self._max_arg_step:
                total += delta
                continue

            if max(abs(q[0] - p[0]), abs(q[1] - p[1])) < self._min_step:
                raise BoundaryZeroError(f"argument jump too sharp to resolve on the {edge} edge", edge=edge)

            mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
            stack.append((mid, q))
            stack.append((p, mid))

        return total

    def edge_change(self, start, end, edge, refinement=0):
        '''Change of arg L along one edge, in radians.'''
        points = self._edge_points(start, end, refinement)
        return sum(self._segment_change(a, b, edge) for a, b in zip(points, points[1:]))

    def winding(self, rectangle, refinement=0):
        '''Total change of arg L around the rectangle divided by 2 pi.'''
        total = sum(self.edge_change(start, end, name, refinement)
                    for name, start, end in rectangle.edges())

        return total / (2 * fpi)

    def _pole_inside(self, rectangle, subtract_pole):
        if not self._params.lambda_.is_one:
            return False

        edge = rectangle.edge_through(Fraction(1), Fraction(0))
        if edge:
            raise BoundaryZeroError("the pole s = 1 lies on the contour", edge=edge)

        inside = rectangle.contains_strictly(Fraction(1), Fraction(0))
        if inside and not subtract_pole:
            raise PoleInsideError(f"the pole s = 1 lies inside {rectangle}")

        return inside

    def _count_once(self, rectangle, subtract_pole):
        pole = self._pole_inside(rectangle, subtract_pole)
        previous = self.winding(rectangle, 0)
        for refinement in range(1, self._max_refinements + 1):
            current = self.winding(rectangle, refinement)
            rounded = round(current)
            if rounded == round(previous) and abs(current - rounded) < 0.25:
                return rounded + (1 if pole else 0), current

            previous = current

        raise NonConvergence(f"argument count around {rectangle} did not settle (last winding {previous:.3f})")

    def count(self, rectangle, nudge=config.boundary_nudge, max_nudges=3, subtract_pole=True):
        '''
        Counts the zeros inside a rectangle. When an edge passes through a
        zero it is moved outward by the nudge and the count is retried;
        a bottom edge on the real axis is moved up instead.

        Arguments:
        'rectangle' -- the Rectangle to count in.
        'nudge' -- outward shift for a failing edge; 0 disables retries.
        'max_nudges' -- how many times to retry.
        'subtract_pole' -- for lambda = 1, correct for the pole at s = 1 when
            it lies inside instead of raising PoleInsideError.

        Returns a CountResult.
        '''
        attempts = max_nudges if nudge else 0
        for attempt in range(attempts + 1):
            try:
                count, winding = self._count_once(rectangle, subtract_pole)
                main_term = (counting_main_term(self._params, rectangle.t_hi)
                             - counting_main_term(self._params, rectangle.t_lo))

                return CountResult(count, main_term, rectangle, winding)
            except BoundaryZeroError as error:
                if attempt == attempts:
                    raise

                if error.edge == "bottom" and rectangle.t_lo == 0:
                    rectangle = Rectangle(rectangle.sigma_lo, rectangle.sigma_hi, nudge, rectangle.t_hi)
                else:
                    rectangle = rectangle.nudged(error.edge, nudge)

                logging.info(f"Moved {error.edge} edge by {float(nudge)}: now counting in {rectangle}")


def count_zeros_rectangle(params, sigma_lo, sigma_hi, t_lo, t_hi, policy=None, tracker=None, **kwargs):
    '''
    Counts zeros of L(lambda, alpha, s) in [sigma_lo, sigma_hi] x [t_lo, t_hi]
    by the argument principle. Extra keyword arguments go to ArgumentTracker.count.
    '''
    tracker = tracker or ArgumentTracker(params, policy)
    return tracker.count(Rectangle(sigma_lo, sigma_hi, t_lo, t_hi), **kwargs)
