from functools import wraps

from marshmallow import ValidationError

from utils.exceptions import (ComplexInputError, MatchingError, PreconditionError, SizeGuardError, StepError,
                              StuckError)
from utils.general import create_response
from utils.logging import setup_logger

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

INPUT_ERRORS = (ComplexInputError, PreconditionError, SizeGuardError, MatchingError, ValidationError)


def command_handler(f):
    """
    Decorator turning a command handler's exceptions into a failed response envelope.

    The wrapped handler returns ``(response, exit_code)``. Input problems map to
    exit code 2; any other ``StuckError`` (illegal step, exhausted budget, failed
    verification) maps to 1. Programming errors are not caught.

    Args:
        f (function): handler taking the parsed arguments.

    Returns:
        function: the wrapped handler.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except StepError as e:
            logger.debug(f"{f.__name__}: illegal step {e.step}")
            return create_response(error=str(e), condition=e.condition), EXIT_FAILED
        except INPUT_ERRORS as e:
            message = e.messages if isinstance(e, ValidationError) else str(e)
            return create_response(error=f"Invalid input: {message}"), EXIT_USAGE
        except StuckError as e:
            return create_response(error=str(e), stats=getattr(e, 'stats', None)), EXIT_FAILED

    return decorated_function
