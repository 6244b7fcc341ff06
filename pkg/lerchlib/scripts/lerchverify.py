import logging
import sys
from argparse import ArgumentParser
from lerchlib.util import config
from lerchlib.util.cliutil import configure_logging
from lerchlib.util.cliutil import exits_on_error
from lerchlib.util.cliutil import rational_arg
from lerchlib.util.errors import VerificationFailure
from lerchlib.lerch.lerchparams import LerchParams
from lerchlib.symmetry.verification import VerifySuite
from lerchlib.symmetry.verification import run_verification

@exits_on_error
def verify(suite, samples, seed, digits, lambda_=None, alpha=None, t_max=100, report_path=None):
    params = LerchParams(lambda_, alpha or lambda_) if lambda_ else None
    report = run_verification(suite, samples, seed, digits, params=params, t_max=t_max)
    print(report.to_string(index=False))
    if report_path:
        report.to_csv(report_path, index=False)

    if not report["passed"].all():
        failed = ", ".join(report.loc[~report["passed"], "check"])
        raise VerificationFailure(f"{suite} failed: {failed}")

    return report

def cli():
    configure_logging()

    parser = ArgumentParser(description="Check lerchlib against analytic identities and counting theorems.")
    parser.add_argument("--suite", required=True, choices=[suite.value for suite in VerifySuite], help="suite to run")
    parser.add_argument("--samples", type=int, default=100, help="random points per parameter pair")
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--digits", type=int, default=40, help="working digits")
    parser.add_argument("--lambda", dest="lambda_", type=rational_arg, help="lambda for counting and theorem1")
    parser.add_argument("--alpha", type=rational_arg, help="alpha for counting and theorem1 (default: lambda)")
    parser.add_argument("--tmax", type=float, default=100, help="height for counting and theorem1")
    parser.add_argument("--report", help="optional CSV path for the report")
    args = parser.parse_args()

    verify(args.suite, args.samples, args.seed, args.digits, args.lambda_, args.alpha, args.tmax, args.report)
    sys.exit(0)

if __name__ == "__main__":
    cli()
