from functools import wraps
import time
from typing import Any, Callable


from logger.logger import Logger


def get_exec_time(func: Callable) -> Callable:
    """
    Decorator that logs how long a function takes to execute.

    Examples:
    >>> @get_exec_time
    >>> def run_suite(name):
    >>>     ...
    >>> run_suite("algebra")
    INFO - Total execution time for 'run_suite': 0.412 s
    """

    @wraps(func)
    def wrapper(*args, **kwargs) -> Any:

        # Define the logger.
        logger = Logger(logger_name=func.__module__)

        begin = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            logger.info(f"Total execution time for '{func.__name__}': {time.perf_counter() - begin:.3f} s")
    return wrapper
