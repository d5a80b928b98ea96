from functools import cache
import os
import sys


import yaml


OVERRIDE_ENV = "CDANALYSIS_CONFIG"
OVERRIDABLE_SECTIONS = ("NUMERICS", "CONTOUR", "TRANSFORM", "SPECIAL")


@cache
def get_config_files() -> dict:
    """
    Load config.yaml and the private config, returning their merged contents.
    The files are read once per process.

    When the CDANALYSIS_CONFIG environment variable names a YAML file, its NUMERICS, CONTOUR,
    TRANSFORM and SPECIAL keys are laid over the result key by key.

    Returns:
        dict: Loaded configuration data. Keys in the private config win, override keys win over both.

    Raises:
        FileNotFoundError: If config.yaml or the override file is not found.
        yaml.YAMLError: If there's an error parsing the YAML files.
    """
    top_level_dir = os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

    config_path = os.path.join(top_level_dir, 'config.yaml')
    priv_config_path = os.path.join(top_level_dir, 'private_config.yaml')
    _priv_config_path = os.path.join(top_level_dir, '_private_config.yaml')
    override_path = os.environ.get(OVERRIDE_ENV)
    config_dict = {}

    # Fall back to the _private_config.yaml template when no private config exists.
    if not os.path.exists(priv_config_path):
        priv_config_path = _priv_config_path

    try:
        with open(config_path, "r") as f:
            config_dict.update(yaml.safe_load(f) or {})
        if os.path.exists(priv_config_path):
            with open(priv_config_path, "r") as f:
                config_dict.update(yaml.safe_load(f) or {})
        if override_path:
            from .get_config import load_override_file
            for section, values in load_override_file(override_path).items():
                config_dict.setdefault(section, {}).update(values)
    except FileNotFoundError as e:
        print(f"Configuration file not found: {e.filename}", file=sys.stderr)
        raise
    except yaml.YAMLError as e:
        print(f"Error parsing YAML file: {e}", file=sys.stderr)
        raise

    return config_dict
