from fractions import Fraction
from lerchlib.util import config
from lerchlib.util.errors import DomainError
from lerchlib.kernel.hpcomplex import to_fraction
from lerchlib.kernel.precisionpolicy import PrecisionPolicy

class ScanConfig:
    '''
    Settings for a zero scan over the strip [sigma_lo, sigma_hi] x [t_min, t_max].

    Arguments:
    't_max' -- upper end of the ordinate range.
    't_min' -- lower end of the ordinate range, default 0.
    'sigma_lo' -- left edge of the strip, default -1.
    'sigma_hi' -- right edge of the strip; None means 1 + alpha.
    'step_density' -- sample points per unit length on contour edges; None
        picks 4 points per expected zero spacing.
    'policy' -- PrecisionPolicy for all evaluations.
    'online_tol' -- |beta - 1/2| below which a zero counts as on the line.
    'window_height' -- ordinate height of the independent scan windows.
    'density_scale' -- multiplier on the sampling density; doubled on rescans.
    'nudge' -- outward shift applied to an edge that passes through a zero.
    'workers' -- worker processes for the window scans.
    '''

    def __init__(self, t_max, t_min=0, sigma_lo=-1, sigma_hi=None, step_density=None, policy=None,
                 online_tol=config.online_tol, window_height=2, density_scale=1,
                 nudge=config.boundary_nudge, workers=None):
        self._t_min = to_fraction(t_min)
        self._t_max = to_fraction(t_max)
        if self._t_min < 0 or self._t_max <= self._t_min:
            raise DomainError(f"invalid ordinate range [{t_min}, {t_max}]")

        self._sigma_lo = to_fraction(sigma_lo)
        self._sigma_hi = None if sigma_hi is None else to_fraction(sigma_hi)
        if self._sigma_hi is not None and self._sigma_hi <= self._sigma_lo:
            raise DomainError(f"invalid strip [{sigma_lo}, {sigma_hi}]")

        self._step_density = step_density
        self._policy = policy or PrecisionPolicy.default()
        self._online_tol = online_tol
        self._window_height = to_fraction(window_height)
        self._density_scale = density_scale
        self._nudge = Fraction(nudge)
        self._workers = workers if workers is not None else config.pool_workers

    @property
    def t_min(self):
        return self._t_min

    @property
    def t_max(self):
        return self._t_max

    @property
    def sigma_lo(self):
        return self._sigma_lo

    @property
    def sigma_hi(self):
        '''Gets the right edge of the strip, or None until bound to parameters.'''
        return self._sigma_hi

    @property
    def step_density(self):
        return self._step_density

    @property
    def policy(self):
        return self._policy

    @property
    def online_tol(self):
        return self._online_tol

    @property
    def window_height(self):
        return self._window_height

    @property
    def density_scale(self):
        return self._density_scale

    @property
    def nudge(self):
        return self._nudge

    @property
    def workers(self):
        return self._workers

    @property
    def t_start(self):
        '''
        Gets the bottom edge actually scanned: t_min, raised by the nudge when
        it is 0 so the contour avoids the real axis.
        '''
        return self._t_min + self._nudge if self._t_min == 0 else self._t_min

    def _copy(self, **changes):
        settings = dict(
            t_max=self._t_max, t_min=self._t_min, sigma_lo=self._sigma_lo, sigma_hi=self._sigma_hi,
            step_density=self._step_density, policy=self._policy, online_tol=self._online_tol,
            window_height=self._window_height, density_scale=self._density_scale,
            nudge=self._nudge, workers=self._workers)

        settings.update(changes)
        return ScanConfig(**settings)

    def for_params(self, params):
        '''Gets a copy with sigma_hi bound to 1 + alpha when it was left open.'''
        if self._sigma_hi is not None:
            return self

        return self._copy(sigma_hi=1 + params.alpha.fraction)

    def doubled(self):
        '''Gets a copy sampling contours twice as densely.'''
        return self._copy(density_scale=self._density_scale * 2)

    def with_range(self, t_min, t_max):
        return self._copy(t_min=t_min, t_max=t_max)
