"""
A decorator that wraps a function in a try-except block with optional retries and exception raising.

Exceptions listed in `exception` are expected ones (engine errors at the cli boundary): they are
logged at ERROR with their message only. Anything else is logged with its traceback.

NOTE: Retry chatter goes to stderr. stdout carries the program's JSON-lines.

Args:
    exception (list): Exception types treated as expected failures. Defaults to [Exception].
    raise_exception (bool): If True, re-raises the last exception once the retries are used up.
                            If False, the wrapped call returns None instead. Defaults to False.
    retries (int): How many times to call the function again after a failure. Defaults to 0.
    logger (Logger): A logger instance. Defaults to a Logger named after the wrapped function's module.

Returns:
    function: A decorated function that implements the try-except logic.

Example:
>>> @try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
>>> def handle_zeta(args):
>>>     return zeta(args.z)
>>> handle_zeta(Namespace(z=1.0))
ERROR:cd_analysis.cli.commands:PoleAtOne in 'handle_zeta': zeta has a pole at z = 1
"""

from functools import wraps
import sys
from typing import Any, Callable


from logger.logger import Logger


def try_except(exception: list=[Exception],
               raise_exception: bool=False,
               retries: int=0,
               logger: Logger=None,
               ) -> Callable:
    expected = tuple(exception)

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            nonlocal logger
            logger = logger or Logger(logger_name=func.__module__, stacklevel=3)

            for attempt in range(retries + 1):
                try:
                    return func(*args, **kwargs)
                except Exception as e:
                    message = f"{e.__class__.__name__} in '{func.__name__}': {e}"
                    if attempt < retries:
                        print(f"{message}\nRetrying ({attempt + 1}/{retries})...", file=sys.stderr)
                        continue
                    if retries:
                        message += f"\nGave up after {retries + 1} attempts."
                    if isinstance(e, expected):
                        logger.error(message)
                    else:
                        logger.exception(message)
                    if raise_exception:
                        raise
                    return None
        return wrapper
    return decorator
