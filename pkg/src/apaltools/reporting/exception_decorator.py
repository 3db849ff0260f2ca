"""Report expected failures of a command instead of a traceback."""
import functools
import sys

from wasabi import msg

from apaltools.errors import ApalError

ERROR_EXIT_CODE = 2


def report_on_exception(func):
    """Turn ApalError and OSError into a message and exit status 2.

    Other exceptions propagate.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ApalError, OSError) as e:
            msg.fail(f"{type(e).__name__}: {e}")
            sys.exit(ERROR_EXIT_CODE)

    return wrapper
