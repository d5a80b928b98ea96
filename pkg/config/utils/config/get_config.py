import sys
from typing import Any


import yaml


from .get_config_files import OVERRIDABLE_SECTIONS, get_config_files


def get_config(path: str, constant: str) -> Any | bool:
    """
    Get a key from the yaml config files.

    Args:
        path (str): The path to the desired key, using dot notation for nested structures.
        constant (str): The specific key to retrieve.

    Returns:
        Union[Any, bool]: The value of the key if found, False otherwise.

    Examples:
        >>> config("NUMERICS", "REL_TOL")
        1e-12
        >>> config("NUMERICS", "NONEXISTENT_KEY") or 3
        3

    NOTE Messages go to stderr. stdout is reserved for command output.
    """
    data: dict = get_config_files()

    # Split the path into individual keys
    keys = path.split('.') + [constant]

    # Traverse the nested dictionary
    try:
        for key in keys:
            if key in data:
                data = data[key]
            else:
                print(f"Could not load config {constant}. Using default instead.", file=sys.stderr)
                return False
        return data
    except (TypeError, KeyError):
        print(f"Could not load config {constant}. Using default instead.", file=sys.stderr)
        return False


def load_override_file(filepath: str) -> dict:
    """
    Load a user-supplied YAML file with the same section layout as config.yaml.
    Used by the command line's --config flag. Missing sections are returned as empty dicts.
    """
    with open(filepath, "r") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Config file '{filepath}' must contain a mapping, got {type(data).__name__}")
    return {section: dict(data.get(section) or {}) for section in OVERRIDABLE_SECTIONS}
