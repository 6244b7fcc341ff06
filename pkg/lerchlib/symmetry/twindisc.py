import logging
from multiprocessing import Pool
from lerchlib.util import config
from lerchlib.util.errors import NoAnnulusFound
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.symmetry.classification import ZeroClass
from lerchlib.zeros.annulus import AnnulusResult
from lerchlib.zeros.annulus import find_zero_free_annulus

def _annulus_for(params, zero, zeros, r0, k_max, policy):
    try:
        return find_zero_free_annulus(params, zero, r0, k_max, zeros, policy)
    except NoAnnulusFound as error:
        return AnnulusResult.failed(zero, r0, error)

def twin_disc_report(params, zeros, classifications, r0=config.annulus_r0, k_max=None,
                     policy=None, workers=None):
    '''
    Runs the zero-free annulus search around every off-line zero and records
    whether the discs around rho and 1 - conj(rho) hold the same number of
    zeros. Zeros without a free ring carry the failure in their result.

    Arguments:
    'params' -- rational LerchParams.
    'zeros' -- the complete zero list the classifications index into.
    'classifications' -- ZeroClassifications from classify_zeros.
    'r0', 'k_max' -- passed to find_zero_free_annulus.
    'workers' -- worker processes, one zero per task.

    Returns a list of AnnulusResult in the order of the off-line zeros.
    '''
    params = LerchParams.coerce(params)
    policy = policy or PrecisionPolicy.default()
    workers = workers if workers is not None else config.pool_workers
    off_line = [zeros[c.index] for c in classifications if c.zero_class == ZeroClass.OffLine]
    logging.info(f"Searching zero-free annuli around {len(off_line)} off-line zeros")
    if workers > 1 and len(off_line) > 1:
        with Pool(min(workers, len(off_line))) as pool:
            tasks = [pool.apply_async(_annulus_for, (params, zero, zeros, r0, k_max, policy))
                     for zero in off_line]

            pool.close()
            pool.join()
            return [task.get() for task in tasks]

    return [_annulus_for(params, zero, zeros, r0, k_max, policy) for zero in off_line]
