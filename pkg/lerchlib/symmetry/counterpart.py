from multiprocessing import Pool
from mpmath import mpc
from lerchlib.util import config
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_mp
from lerchlib.lerch.lerchparams import LerchParams

class CounterpartResult:
    '''
    |L(1 - lambda, 1 - lambda, rho)| at a zero rho of L(lambda, lambda, s).

    Arguments:
    'counterpart_abs' -- the absolute value as an mpf.
    'strict_symmetric' -- whether it vanishes to half the working digits.
    '''

    def __init__(self, counterpart_abs, strict_symmetric):
        self._counterpart_abs = counterpart_abs
        self._strict_symmetric = strict_symmetric

    @property
    def counterpart_abs(self):
        return self._counterpart_abs

    @property
    def strict_symmetric(self):
        return self._strict_symmetric


def counterpart_test(lambda_, zero, policy=None):
    '''
    Evaluates L(1 - lambda, 1 - lambda, s) at a zero of L(lambda, lambda, s);
    a vanishing value would make the zero symmetric in the strict sense.
    '''
    complement = LerchParams(lambda_).lambda_.complement()
    params = LerchParams(complement, complement)
    policy = policy or PrecisionPolicy.default()
    with policy.context():
        value = abs(lerch_mp(params, mpc(zero.beta, zero.gamma_t), policy.working_digits)[0])
        return CounterpartResult(value, value < policy.half_digits_tolerance)

def counterpart_tests(lambda_, zeros, policy=None, workers=None):
    '''Runs counterpart_test on every zero, one zero per worker task.'''
    workers = workers if workers is not None else config.pool_workers
    if workers > 1 and len(zeros) > 1:
        with Pool(min(workers, len(zeros))) as pool:
            tasks = [pool.apply_async(counterpart_test, (lambda_, zero, policy)) for zero in zeros]
            pool.close()
            pool.join()
            return [task.get() for task in tasks]

    return [counterpart_test(lambda_, zero, policy) for zero in zeros]
