import os


import pandas as pd


from logger.logger import Logger
from config.config import CSV_OUTPUT_FOLDER


def save_list_of_dicts_to_csv_via_pandas(list_of_dicts: list[dict],
                                        filename: str,
                                        folder: str = CSV_OUTPUT_FOLDER,
                                        index: bool = False,
                                        return_df: bool = False,
                                        logger: Logger = None,
                                        mode: str = 'w',
                                        ) -> None|pd.DataFrame:
    """
    Save a list of dictionaries to a CSV file using a Pandas DataFrame.

    Args:
        list_of_dicts (list[dict]): Rows to save. An empty list writes a header-less empty file.
        filename (str): Name of the output CSV file inside folder.
        folder (str, optional): Output folder. Defaults to CSV_OUTPUT_FOLDER.
        index (bool, optional): Whether to write row index. Defaults to False.
        return_df (bool, optional): Whether to also return the dataframe itself in addition to saving it.
        logger (Logger, optional): Logger object for logging messages. Defaults to this module's logger.
        mode (str, optional): 'w' to overwrite, 'a' to append (the header is only written for new files).

    Return:
       None or pd.DataFrame: Returns None by default. If return_df is True, returns the DataFrame that was saved.

    Raises:
        ValueError: If the input is not a list of dictionaries.

    Example:
    >>> rows = [{'t_bracket_lo': 14.1, 't_bracket_hi': 14.2, 'refined_t': 14.134725, 'abs_zeta': 3e-7}]
    >>> save_list_of_dicts_to_csv_via_pandas(rows, 'critical_line_zeros.csv', logger=logger)
    """
    logger = logger or Logger(logger_name=__name__)
    # Type checking.
    if not isinstance(list_of_dicts, list) or (list_of_dicts and not isinstance(list_of_dicts[0], dict)):
        error_message = f"list_of_dicts argument is not a list of dicts, but a {type(list_of_dicts)}"
        logger.error(error_message)
        raise ValueError(error_message)

    os.makedirs(folder, exist_ok=True)
    filepath = os.path.join(folder, filename)

    df = pd.DataFrame.from_records(list_of_dicts)
    logger.info(f"DataFrame created with shape {df.shape}. Saving to {filepath}...")
    logger.debug(f"df.head\n{df.head()}", f=True)
    exists = os.path.exists(filepath)
    if exists and mode == 'a':
        logger.warning(f"{filepath} already exists. Appending to prevent overwrites...")
    df.to_csv(filepath, index=index, mode=mode, header=not (exists and mode == 'a'))
    logger.info(f"{filename} saved to {filepath}.")

    return df if return_df else None
