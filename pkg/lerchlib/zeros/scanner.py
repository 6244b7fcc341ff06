import logging
from fractions import Fraction
from multiprocessing import Pool
from lerchlib.util.errors import BoundaryZeroError
from lerchlib.util.errors import CompletenessError
from lerchlib.util.errors import DomainError
from lerchlib.util.errors import DriftError
from lerchlib.util.errors import NonConvergence
from lerchlib.kernel.hpcomplex import to_mpf
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.zeros.argumenttracker import ArgumentTracker
from lerchlib.zeros.muller import refine_zero
from lerchlib.zeros.rectangle import Rectangle

# Boxes this small that still hold several zeros point to a multiple zero.
_min_box = Fraction(1, 2 ** 20)

# Alternative cut positions when the midpoint cut runs through a zero.
_split_ratios = (Fraction(1, 2), Fraction(17, 32), Fraction(15, 32), Fraction(9, 16))

_max_rescans = 3

def _make_tracker(params, scan_config):
    return ArgumentTracker(params, scan_config.policy, scan_config.step_density, scan_config.density_scale)

def _windows(scan_config):
    windows = []
    t = scan_config.t_start
    while t < scan_config.t_max:
        top = min(t + scan_config.window_height, scan_config.t_max)
        windows.append(Rectangle(scan_config.sigma_lo, scan_config.sigma_hi, t, top))
        t = top

    return windows

def _split_counted(tracker, box, count):
    for ratio in _split_ratios:
        first, second = box.split(ratio)
        try:
            first_count = tracker.count(first, nudge=0).count
            second_count = tracker.count(second, nudge=0).count
        except BoundaryZeroError:
            continue

        if first_count + second_count != count:
            raise NonConvergence(
                f"sub-box counts {first_count} + {second_count} disagree with {count} in {box}")

        return [(first, first_count), (second, second_count)]

    raise NonConvergence(f"every cut of {box} runs through a zero")

def _isolate(params, tracker, window, count, scan_config):
    zeros = []
    pending = [(window, count)]
    while pending:
        box, box_count = pending.pop()
        if box_count == 0:
            continue

        small = max(box.width, box.height) < _min_box
        if box_count == 1:
            try:
                zeros.append(refine_zero(params, box.center_mpc(), scan_config.policy,
                                         box=box, box_count=1, tracker=tracker))
                continue
            except (DriftError, NonConvergence) as error:
                if small:
                    raise NonConvergence(f"could not refine the zero in {box}: {error}")
        elif small:
            raise NonConvergence(f"{box_count} zeros remain in {box}; possible multiple zero")

        pending.extend(_split_counted(tracker, box, box_count))

    return zeros

def _scan_window(params, scan_config, window):
    '''Returns the zeros in one window, or None when the window could not be resolved.'''
    tracker = _make_tracker(params, scan_config)
    try:
        result = tracker.count(window, nudge=scan_config.nudge)
        zeros = _isolate(params, tracker, result.rectangle, result.count, scan_config)
    except NonConvergence as error:
        logging.info(f"  {window}: unresolved ({error})")
        return None

    logging.info(f"  {window}: {len(zeros)} zeros ({tracker.evaluations} evaluations)")
    return zeros

def _deduplicate(zeros, tolerance=1e-6):
    # Nudged window edges can overlap, so a zero near a seam may be found twice.
    unique = []
    for zero in sorted(zeros, key=lambda z: z.gamma_t):
        if unique and abs(zero.rho - unique[-1].rho) < tolerance:
            continue

        unique.append(zero)

    return unique

def _scan_once(params, scan_config):
    windows = _windows(scan_config)
    if scan_config.workers > 1 and len(windows) > 1:
        with Pool(min(scan_config.workers, len(windows))) as pool:
            tasks = [pool.apply_async(_scan_window, (params, scan_config, window)) for window in windows]
            pool.close()
            pool.join()
            results = [task.get() for task in tasks]
    else:
        results = [_scan_window(params, scan_config, window) for window in windows]

    unresolved = sum(1 for window_zeros in results if window_zeros is None)
    zeros = _deduplicate([zero for window_zeros in results if window_zeros for zero in window_zeros])
    return zeros, unresolved

def _in_range(zeros, scan_config):
    # a nudged edge may let in a zero just outside (t_min, t_max]
    with scan_config.policy.context():
        t_min, t_max = to_mpf(scan_config.t_min), to_mpf(scan_config.t_max)
        return [zero for zero in zeros if t_min < zero.gamma_t <= t_max]

def scan_zeros(params, scan_config):
    '''
    Finds every zero of L(lambda, alpha, s) with t_min < gamma <= t_max in
    the strip of the scan configuration. The range is cut into windows that
    are scanned independently; each window is bisected until its boxes hold
    at most one zero, which is then refined and certified. The number found
    must match an argument-principle count over the whole range, and a
    mismatch, or a window that cannot be resolved, triggers a rescan at
    double sampling density.

    Arguments:
    'params' -- rational LerchParams, or a (lambda, alpha) tuple.
    'scan_config' -- a ScanConfig.

    Returns a list of ZeroRecord sorted by ordinate. Raises CompletenessError
    carrying the partial list when the counts cannot be reconciled.
    '''
    params = LerchParams.coerce(params)
    if not params.is_rational:
        raise DomainError("zero scans need rational parameters")

    scan_config = scan_config.for_params(params)
    zeros = []
    for attempt in range(_max_rescans + 1):
        logging.info(f"Scanning L{params} for zeros in [{float(scan_config.t_min)}, {float(scan_config.t_max)}]"
                     f" (density x{scan_config.density_scale})")

        zeros, unresolved = _scan_once(params, scan_config)
        if unresolved:
            logging.info(f"{unresolved} windows unresolved; rescanning")
            scan_config = scan_config.doubled()
            continue

        full_window = Rectangle(scan_config.sigma_lo, scan_config.sigma_hi, scan_config.t_start, scan_config.t_max)
        expected = _make_tracker(params, scan_config).count(full_window, nudge=scan_config.nudge).count
        if expected == len(zeros):
            logging.info(f"Found all {expected} zeros")
            return _in_range(zeros, scan_config)

        logging.info(f"Found {len(zeros)} zeros but counted {expected}; rescanning")
        scan_config = scan_config.doubled()

    raise CompletenessError(
        f"could not reconcile {len(zeros)} zeros found with the argument-principle count",
        zeros=_in_range(zeros, scan_config))
