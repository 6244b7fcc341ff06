import logging
import sys
from argparse import ArgumentTypeError
from functools import wraps
from lerchlib.util.errors import LerchError
from lerchlib.lerch.rationalparam import RationalParam

def configure_logging():
    logging.basicConfig(
        level=logging.INFO, stream=sys.stdout,
        format="%(asctime)s %(message)s", datefmt="%m/%d %H:%M:%S")

def rational_arg(text):
    '''argparse type for "b/d" parameters in (0, 1].'''
    try:
        return RationalParam.parse(text)
    except LerchError as error:
        raise ArgumentTypeError(str(error))

def exits_on_error(fn):
    '''
    Runs a command, turning library errors into their exit codes: 2 for
    domain and parse errors, 3 for numerical failures and 4 for failed
    verifications.
    '''
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except LerchError as error:
            logging.error(f"{type(error).__name__}: {error}")
            sys.exit(error.exit_code)

    return wrapper
