import logging
import sys
from argparse import ArgumentParser
from pathlib import Path
from lerchlib.util import config
from lerchlib.util.cliutil import configure_logging
from lerchlib.util.cliutil import exits_on_error
from lerchlib.util.cliutil import rational_arg
from lerchlib.util.errors import CompletenessError
from lerchlib.util.errors import ParseError
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.provider.databaseformatfactory import ZeroDatabaseFormatFactory
from lerchlib.provider.zerodatabase import ZeroDatabase
from lerchlib.symmetry.classification import classify_zeros
from lerchlib.symmetry.counterpart import counterpart_tests
from lerchlib.zeros.scanconfig import ScanConfig
from lerchlib.zeros.scanner import scan_zeros

def default_output_path(params, format_name="csv"):
    lam, alpha = params.lambda_, params.alpha
    return Path(f"zeros_{lam.num}-{lam.den}_{alpha.num}-{alpha.den}.{format_name}")

def partial_output_path(path):
    '''zeros.csv becomes zeros.partial.csv.'''
    path = Path(path)
    return path.with_name(f"{path.stem}.partial{path.suffix}")

def build_database(params, zeros, scan_config, workers=None):
    '''Classifies a zero list, runs the counterpart test where it applies and wraps it all in a ZeroDatabase.'''
    classifications, report = classify_zeros(
        zeros, scan_config.online_tol, lambda_=params.lambda_, t_max=scan_config.t_max)

    counterparts = None
    if params.equal_params:
        counterparts = counterpart_tests(params.lambda_, zeros, scan_config.policy, workers)

    database = ZeroDatabase.from_zeros(
        params, zeros, classifications, counterparts, scan_config.policy.working_digits,
        scan_config.t_min, scan_config.t_max, scan_config.online_tol)

    return database, report

@exits_on_error
def find_zeros(lambda_, alpha, t_min, t_max, digits, out_path=None, format_name=None, workers=None):
    params = LerchParams(lambda_, alpha or lambda_)
    scan_config = ScanConfig(t_max, t_min, policy=PrecisionPolicy(digits), workers=workers)
    factory = ZeroDatabaseFormatFactory()
    try:
        database_format = factory.get_format(out_path, format_name) if out_path \
            else factory.get_format(format_name=format_name or "csv")
    except NotImplementedError as error:
        raise ParseError(str(error))

    out_path = Path(out_path or default_output_path(params, database_format.name))
    try:
        zeros = scan_zeros(params, scan_config)
    except CompletenessError as error:
        partial_path = partial_output_path(out_path)
        database, _ = build_database(params, error.zeros or [], scan_config, workers)
        database_format.write(database, partial_path)
        logging.error(f"Scan incomplete; wrote {len(database)} zeros found so far to {partial_path}")
        raise

    database, report = build_database(params, zeros, scan_config, workers)
    database_format.write(database, out_path)
    logging.info(f"Wrote {len(database)} zeros to {out_path}")
    print(report.row())
    return database

def cli():
    configure_logging()

    parser = ArgumentParser(description="Find and certify the zeros of L(lambda, alpha, s) in the strip -1 <= sigma <= 1 + alpha.")
    parser.add_argument("--lambda", dest="lambda_", type=rational_arg, required=True, help="lambda as b/d")
    parser.add_argument("--alpha", type=rational_arg, help="alpha as b/d (default: lambda)")
    parser.add_argument("--tmin", type=float, default=0, help="lower end of the ordinate range")
    parser.add_argument("--tmax", type=float, required=True, help="upper end of the ordinate range")
    parser.add_argument("--digits", type=int, default=config.default_digits, help="working digits")
    parser.add_argument("--out", help="output database path (.csv or .json)")
    parser.add_argument("--format", dest="format_name", choices=["csv", "json"], help="output format")
    parser.add_argument("--workers", type=int, default=config.pool_workers, help="worker processes")
    args = parser.parse_args()

    find_zeros(args.lambda_, args.alpha, args.tmin, args.tmax, args.digits, args.out, args.format_name, args.workers)
    sys.exit(0)

if __name__ == "__main__":
    cli()
