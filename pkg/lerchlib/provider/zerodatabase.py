from collections import OrderedDict
import pandas as pd
from mpmath import mp
from mpmath import mpf
from mpmath import mpc
from mpmath import nstr
from lerchlib import __version__
from lerchlib.util import config
from lerchlib.lerch.lerchparams import LerchParams

class ZeroDatabase:
    '''
    A table of zeros for one parameter pair with a metadata header. Values
    are kept as the strings they were written as, so reading a database and
    writing it back reproduces the file exactly.

    Arguments:
    'header' -- ordered metadata: version, lambda, alpha, digits, t_min,
        t_max, online_tol and pair_tol.
    'rows' -- a DataFrame of strings with the columns in COLUMNS, sorted by gamma.
    '''

    COLUMNS = ["lambda_num", "lambda_den", "alpha_num", "alpha_den", "beta", "gamma",
               "residual", "class", "partner_gamma", "counterpart_abs"]

    def __init__(self, header=None, rows=None):
        self._header = OrderedDict(header or {})
        self._rows = rows if rows is not None else pd.DataFrame(columns=self.COLUMNS, dtype=str)

    @classmethod
    def from_zeros(cls, params, zeros, classifications=None, counterparts=None, digits=None,
                   t_min=0, t_max=None, online_tol=config.online_tol, pair_tol=config.pair_tol):
        '''
        Builds a database from a scan.

        Arguments:
        'params' -- the LerchParams the zeros belong to.
        'zeros' -- ZeroRecords sorted by gamma.
        'classifications' -- optional ZeroClassifications, parallel to zeros.
        'counterparts' -- optional CounterpartResults, parallel to zeros.
        'digits' -- decimal digits to write beta and gamma with.
        '''
        params = LerchParams.coerce(params)
        digits = int(digits or config.default_digits)
        header = OrderedDict([
            ("version", __version__),
            ("lambda", str(params.lambda_)),
            ("alpha", str(params.alpha)),
            ("digits", str(digits)),
            ("t_min", str(t_min)),
            ("t_max", str(t_max)),
            ("online_tol", str(online_tol)),
            ("pair_tol", str(pair_tol)),
        ])

        records = []
        with mp.workdps(digits):
            for i, zero in enumerate(zeros):
                classification = classifications[i] if classifications else None
                counterpart = counterparts[i] if counterparts else None
                partner = classification.partner_index if classification else None
                records.append([
                    str(params.lambda_.num), str(params.lambda_.den),
                    str(params.alpha.num), str(params.alpha.den),
                    nstr(zero.beta, digits), nstr(zero.gamma_t, digits),
                    nstr(zero.residual, 5),
                    classification.zero_class.value if classification else "",
                    nstr(zeros[partner].gamma_t, digits) if partner is not None else "",
                    nstr(counterpart.counterpart_abs, 10) if counterpart else "",
                ])

        return cls(header, pd.DataFrame(records, columns=cls.COLUMNS, dtype=str))

    @property
    def header(self):
        '''Gets the metadata header.'''
        return self._header

    @property
    def rows(self):
        '''Gets the zero table as a DataFrame of strings.'''
        return self._rows

    @property
    def digits(self):
        return int(self._header.get("digits", config.default_digits))

    def zeros(self):
        '''Gets the zeros as mpc values at the header's precision.'''
        with mp.workdps(self.digits):
            return [mpc(mpf(beta), mpf(gamma)) for beta, gamma in zip(self._rows["beta"], self._rows["gamma"])]

    def __len__(self):
        return len(self._rows)
