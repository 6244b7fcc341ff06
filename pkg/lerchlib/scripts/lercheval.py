import logging
from argparse import ArgumentParser
from mpmath import nstr
from lerchlib.util import config
from lerchlib.util.cliutil import configure_logging
from lerchlib.util.cliutil import exits_on_error
from lerchlib.util.cliutil import rational_arg
from lerchlib.kernel.hpcomplex import HPComplex
from lerchlib.kernel.precisionpolicy import PrecisionPolicy
from lerchlib.lerch.evaluation import lerch_with_bound
from lerchlib.lerch.lerchparams import LerchParams

@exits_on_error
def evaluate(lambda_, alpha, s, digits):
    policy = PrecisionPolicy(digits)
    params = LerchParams(lambda_, alpha or lambda_)
    s = HPComplex.parse(s, digits)
    value, bound = lerch_with_bound(params, s, policy)
    print(f"L({params.lambda_}, {params.alpha}, {s.to_string(15)}) = {value.to_string(digits)}")
    print(f"error bound: {nstr(bound, 3)}")
    return value

def cli():
    configure_logging()

    parser = ArgumentParser(description="Evaluate the Lerch zeta-function L(lambda, alpha, s).")
    parser.add_argument("--lambda", dest="lambda_", type=rational_arg, required=True, help="lambda as b/d")
    parser.add_argument("--alpha", type=rational_arg, help="alpha as b/d (default: lambda)")
    parser.add_argument("--s", required=True, help="the argument, for example 0.5+9.69i")
    parser.add_argument("--digits", type=int, default=config.default_digits, help="significant digits")
    args = parser.parse_args()

    logging.debug(f"Evaluating L({args.lambda_}, {args.alpha or args.lambda_}, {args.s})")
    evaluate(args.lambda_, args.alpha, args.s, args.digits)

if __name__ == "__main__":
    cli()
