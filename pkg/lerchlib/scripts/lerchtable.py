import json
import logging
import os
import site
import sys
import pandas as pd
from argparse import ArgumentParser
from lerchlib.util import config
from lerchlib.util.cliutil import configure_logging
from lerchlib.util.cliutil import exits_on_error
from lerchlib.util.cliutil import rational_arg
from lerchlib.util.errors import ParseError
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.lerch.rationalparam import RationalParam
from lerchlib.symmetry.classification import classify_zeros
from lerchlib.zeros.scanconfig import ScanConfig
from lerchlib.zeros.scanner import scan_zeros

TABLE_COLUMNS = ["lambda", "N1", "N2", "pct"]

def load_table_lambdas(lambdas_config_path=None):
    '''Loads the standard list of lambda values from lambdas.json.'''
    for config_path in filter(None, (
        lambdas_config_path,
        os.path.join(site.USER_BASE, "Tools", "lerchlib", "lerchtable", "lambdas.json"),
        os.path.join(sys.prefix, "Tools", "lerchlib", "lerchtable", "lambdas.json"),
    )):
        if os.path.exists(config_path):
            with open(config_path) as lambdas_file:
                return [RationalParam.parse(value) for value in json.load(lambdas_file)["lambdas"]]

    raise ParseError("lambda list configuration file not found")

@exits_on_error
def build_table(lambdas, t_max, digits, workers=None):
    '''
    Scans L(lambda, lambda, s) up to t_max for each lambda and tabulates the
    number of zeros and the number off the critical line.

    Returns a DataFrame with the columns lambda, N1, N2 and pct.
    '''
    policy = PrecisionPolicy(digits)
    rows = []
    for lambda_ in lambdas:
        params = LerchParams(lambda_, lambda_)
        zeros = scan_zeros(params, ScanConfig(t_max, policy=policy, workers=workers))
        _, report = classify_zeros(zeros, lambda_=lambda_, t_max=t_max)
        logging.info(f"lambda = {lambda_}: {report.row()}")
        print(report.row())
        rows.append(report.to_dict())

    return pd.DataFrame(rows, columns=TABLE_COLUMNS)

def cli():
    configure_logging()

    parser = ArgumentParser(description="Tabulate zeros on and off the critical line of L(lambda, lambda, s).")
    parser.add_argument("--lambdas", nargs="*", type=rational_arg, default=[], help="lambda values as b/d")
    parser.add_argument("--standard", action="store_true", default=False,
                        help="use the standard list of lambda values from lambdas.json")
    parser.add_argument("--lambdas_config", help="path to an alternative lambdas.json")
    parser.add_argument("--tmax", type=float, default=300, help="height to scan to")
    parser.add_argument("--digits", type=int, default=config.default_digits, help="working digits")
    parser.add_argument("--out", help="optional CSV path for the table")
    parser.add_argument("--workers", type=int, default=config.pool_workers, help="worker processes")
    args = parser.parse_args()

    lambdas = list(args.lambdas)
    if args.standard:
        lambdas += exits_on_error(load_table_lambdas)(args.lambdas_config)

    print(", ".join(TABLE_COLUMNS))
    table = build_table(lambdas, args.tmax, args.digits, args.workers)
    if args.out:
        table.to_csv(args.out, index=False)
        logging.info(f"Wrote table to {args.out}")

if __name__ == "__main__":
    cli()
