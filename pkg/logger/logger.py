"""
Module for the project's logging class.

Includes:
1. A Logger class that creates per-module loggers with their own log folders under debug_logs/.
2. Configuration handling for the file and console log levels.

Log files always receive DEBUG and above. The console handler writes to stderr at
CONSOLE_LOG_LEVEL so that command output on stdout stays machine-readable.

Usage:
    from logger.logger import Logger
    logger = Logger(logger_name=__name__)
    logger.info("Residue computed")
    logger.debug("Refinement round 3: 512 samples")
"""
from datetime import datetime
import logging
import os
import signal
import sys
import threading
import time
from typing import Callable


import yaml


from .utils.logger.delete_empty_log_files import delete_empty_log_files

# Define general folder for log files
script_dir = os.path.dirname(os.path.realpath(__file__))
PROJECT_ROOT = os.path.dirname(script_dir)
PROGRAM_NAME = "cd_analysis"
debug_log_folder = os.path.join(PROJECT_ROOT, "debug_logs")

# We do a separate yaml import to avoid circular imports with the config file.
config_path = os.path.join(PROJECT_ROOT, 'config.yaml')
try:
    delete_empty_log_files(debug_log_folder)
    with open(config_path, "r") as f:
        config = yaml.safe_load(f)
    DEFAULT_LOG_LEVEL: int = config['SYSTEM']['DEFAULT_LOG_LEVEL']
    FORCE_DEFAULT_LOG_LEVEL_FOR_WHOLE_PROGRAM: bool = config['SYSTEM']['FORCE_DEFAULT_LOG_LEVEL_FOR_WHOLE_PROGRAM']
    CONSOLE_LOG_LEVEL: int = config['SYSTEM'].get('CONSOLE_LOG_LEVEL', logging.WARNING)
except Exception as e:
    # Run the entire program in debug mode if we lack configs.
    DEFAULT_LOG_LEVEL = logging.DEBUG
    FORCE_DEFAULT_LOG_LEVEL_FOR_WHOLE_PROGRAM = True
    CONSOLE_LOG_LEVEL = logging.WARNING
    print(f"Could not get log levels from config.yaml due to '{e}'. Using DEBUG.", file=sys.stderr)

START_TIME = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")


class Logger:
    """
    Create a logger with a per-name log folder and a stderr console handler.

    Parameters:
        logger_name: (str) Name for the logger, usually the calling module's __name__.
            Defaults to the program's name.
        current_time: (str) Timestamp used in the log filename. Defaults to the process start time.
        log_level (int): The logging level. Defaults to DEFAULT_LOG_LEVEL from config.yaml.
        stacklevel (int): The depth of function calls for determining log origin. Defaults to 2.

    Methods:
        info/debug/warning/error/critical/exception(message, f=False, t=None, off=False)

    Example:
        >>> logger = Logger(logger_name=__name__)
        >>> logger.info("Hello world!")
        '2024-09-18 18:38:44,185 - example_logger - INFO - example.py: 2 - Hello world!'
    """

    def __init__(self,
                 logger_name: str=PROGRAM_NAME,
                 current_time: str=START_TIME,
                 log_level: int=DEFAULT_LOG_LEVEL,
                 stacklevel: int=None
                ):
        self.logger_name = logger_name
        self.current_time = current_time
        self.log_level = log_level if not FORCE_DEFAULT_LOG_LEVEL_FOR_WHOLE_PROGRAM else DEFAULT_LOG_LEVEL
        # We make stacklevel=2 as otherwise it'll give the filename and line numbers from the logger class itself.
        self.stacklevel = stacklevel or 2
        self.filepath = None
        self.shutting_down = False

        # Signal handlers can only be installed from the main thread.
        if threading.current_thread() is threading.main_thread():
            self._setup_signal_handlers()

        self.logger_folder = os.path.join(debug_log_folder, self.logger_name)
        os.makedirs(self.logger_folder, exist_ok=True)

        self.logger = logging.getLogger(f"{self.logger_name}_logger")
        self.logger.setLevel(self.log_level)
        self.logger.propagate = False # Prevent logs from being handled by parent loggers

        if not self.logger.handlers:
            formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(filename)s: %(lineno)d - %(message)s')
            filename = f"{self.logger_name}_debug_log_{self.current_time}.log"
            self.filepath = os.path.join(self.logger_folder, filename)

            # delay=True keeps modules that never log from leaving empty files behind.
            file_handler = logging.FileHandler(self.filepath, delay=True)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)

            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(CONSOLE_LOG_LEVEL)
            console_handler.setFormatter(formatter)

            self.logger.addHandler(file_handler)
            self.logger.addHandler(console_handler)

    def _setup_signal_handlers(self) -> None:
        """
        Flush the log files on forced shutdowns and keyboard interrupts.
        """
        signal.signal(signal.SIGINT, self._handle_shutdown_signal)
        signal.signal(signal.SIGTERM, self._handle_shutdown_signal)
        if sys.platform == "win32":
            signal.signal(signal.SIGBREAK, self._handle_shutdown_signal)

    def _handle_shutdown_signal(self, signum: int, frame) -> None:
        if self.shutting_down:
            sys.exit(1)
        self.shutting_down = True
        self.logger.info(f"Received shutdown signal: {signal.Signals(signum).name}")
        self._cleanup()
        sys.exit(130 if signum == signal.SIGINT else 1)

    def _cleanup(self) -> None:
        for handler in self.logger.handlers:
            handler.flush()
        logging.shutdown()

    def _f(self, message: str) -> str:
        """
        Frame the message with a line of asterisks above and below it, at most 100 wide.
        """
        asterisk = ('*' * len(message))[:100]
        return f"\n{asterisk}\n{message}\n{asterisk}\n"

    def _message_template(self, message: str, method: Callable, f: bool, t: float, off: bool) -> None:
        """
        f is for formatting with asterisks.\n
        t is for pausing the program by a specified number of seconds after the message has been logged.\n
        off turns off the logger for this message.
        """
        if off:
            return
        # We move up the stack by 1 because it's a nested method.
        method(self._f(message) if f else message, stacklevel=self.stacklevel+1)
        if t:
            time.sleep(t)

    def info(self, message, f: bool=False, t: float=None, off: bool=False) -> None:
        self._message_template(message, self.logger.info, f, t, off)

    def debug(self, message, f: bool=False, t: float=None, off: bool=False) -> None:
        self._message_template(message, self.logger.debug, f, t, off)

    def warning(self, message, f: bool=False, t: float=None, off: bool=False) -> None:
        self._message_template(message, self.logger.warning, f, t, off)

    def error(self, message, f: bool=False, t: float=None, off: bool=False) -> None:
        self._message_template(message, self.logger.error, f, t, off)

    def critical(self, message, f: bool=False, t: float=None, off: bool=False) -> None:
        self._message_template(message, self.logger.critical, f, t, off)

    def exception(self, message, f: bool=False, t: float=None, off: bool=False) -> None:
        """
        Log at ERROR with the active exception's traceback attached.
        """
        self._message_template(message, self.logger.exception, f, t, off)
