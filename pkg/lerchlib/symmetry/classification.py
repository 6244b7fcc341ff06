import warnings
from aenum import Enum
from mpmath import mp
from mpmath import mpf
from lerchlib.util import config
from lerchlib.util.errors import UnmatchedPairWarning

class ZeroClass(Enum):
                # Label
    OnLine      = "on_line"
    OffLine     = "off_line"


class ZeroClassification:
    '''
    The class of one zero and, for zeros off the critical line, the index of
    its partner 1 - conj(rho).

    Arguments:
    'index' -- position of the zero in the classified list.
    'zero_class' -- the ZeroClass.
    'partner_index' -- index of the matched partner, or None.
    'pair_residual' -- |(beta1 + beta2) - 1| + |gamma1 - gamma2| for the pair, or None.
    '''

    def __init__(self, index, zero_class, partner_index=None, pair_residual=None):
        self._index = index
        self._zero_class = zero_class
        self._partner_index = partner_index
        self._pair_residual = pair_residual

    @property
    def index(self):
        return self._index

    @property
    def zero_class(self):
        return self._zero_class

    @property
    def partner_index(self):
        return self._partner_index

    @property
    def pair_residual(self):
        return self._pair_residual

    def __repr__(self):
        return (f"ZeroClassification({self._index}, {self._zero_class.value}, "
                f"partner_index={self._partner_index})")


class SymmetryReport:
    '''
    Counts of zeros on and off the critical line for one parameter choice.

    Arguments:
    'lambda_' -- the parameter label, for example "3/4".
    'n1' -- the number of zeros found.
    'n2' -- the number of those off the critical line.
    'unmatched' -- indices of off-line zeros with no partner.
    't_max' -- the ordinate the scan ran to.
    '''

    def __init__(self, lambda_, n1, n2, unmatched=(), t_max=None):
        self._lambda = str(lambda_)
        self._n1 = n1
        self._n2 = n2
        self._unmatched = list(unmatched)
        self._t_max = t_max

    @property
    def lambda_(self):
        return self._lambda

    @property
    def n1(self):
        '''Gets the number of zeros.'''
        return self._n1

    @property
    def n2(self):
        '''Gets the number of zeros off the critical line.'''
        return self._n2

    @property
    def pct(self):
        '''Gets 100 * n2 / n1, or 0 when there are no zeros.'''
        return 100 * self._n2 / self._n1 if self._n1 else 0.0

    @property
    def unmatched(self):
        return self._unmatched

    @property
    def t_max(self):
        return self._t_max

    def row(self):
        '''Formats the report as "lambda, N1, N2, pct", for example "1/2, 203, 0, 0.00".'''
        return f"{self._lambda}, {self._n1}, {self._n2}, {self.pct:.2f}"

    def to_dict(self):
        return {"lambda": self._lambda, "N1": self._n1, "N2": self._n2, "pct": round(self.pct, 2)}


def _pair_residual(first, second):
    return float(abs(first.beta + second.beta - 1) + abs(first.gamma_t - second.gamma_t))

def classify_zeros(zeros, online_tol=config.online_tol, pair_tol=config.pair_tol, lambda_=None, t_max=None):
    '''
    Classifies zeros as on or off the critical line and pairs each off-line
    zero rho with the off-line zero nearest to 1 - conj(rho). Pairing is
    greedy in order of ordinate. Unpaired zeros raise an UnmatchedPairWarning
    and are listed in the report.

    Arguments:
    'zeros' -- ZeroRecords, usually from one scan.
    'online_tol' -- |beta - 1/2| at or below which a zero is on the line.
    'pair_tol' -- largest pair residual accepted for a match.
    'lambda_', 't_max' -- labels carried into the report.

    Returns (list of ZeroClassification, SymmetryReport).
    '''
    with mp.workdps(max([zero.precision for zero in zeros] or [15])):
        half = mpf(1) / 2
        off_line = [i for i, zero in enumerate(zeros) if abs(zero.beta - half) > online_tol]
        partners = {}
        residuals = {}
        for i in sorted(off_line, key=lambda k: zeros[k].gamma_t):
            if i in partners:
                continue

            candidates = [(_pair_residual(zeros[i], zeros[j]), j) for j in off_line
                          if j != i and j not in partners]

            if not candidates:
                continue

            residual, j = min(candidates)
            if residual < pair_tol:
                partners[i], partners[j] = j, i
                residuals[i] = residuals[j] = residual

    unmatched = [i for i in off_line if i not in partners]
    for i in unmatched:
        warnings.warn(f"off-line zero {zeros[i].rho} has no partner 1 - conj(rho)", UnmatchedPairWarning)

    off_line_set = set(off_line)
    classifications = [
        ZeroClassification(i, ZeroClass.OffLine if i in off_line_set else ZeroClass.OnLine,
                           partners.get(i), residuals.get(i))
        for i in range(len(zeros))]

    report = SymmetryReport(lambda_ if lambda_ is not None else "", len(zeros), len(off_line), unmatched, t_max)
    return classifications, report
