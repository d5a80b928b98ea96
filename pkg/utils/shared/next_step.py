from logger.logger import Logger
logger = Logger(logger_name=__name__,log_level=20)


def next_step(message: str, step: int=None) -> None:
    """
    Log an asterisk-framed stage banner, e.g. "Step 3: residues".
    Banners go to the log files only; stdout stays reserved for results.
    """
    if step is not None:
        message = f"Step {step}: {message}"
    logger.info(message, f=True)
