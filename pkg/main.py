import argparse
import json
import os
import sys


import pandas as pd


from logger.logger import Logger
logger = Logger(logger_name=__name__)


CONFIG_ENV = "CDANALYSIS_CONFIG"


def _error(name: str, message: str) -> None:
    print(json.dumps({"error": name, "message": message}, separators=(",", ":")), file=sys.stderr)


def _apply_config(argv: list[str]) -> None:
    """--config has to be in the environment before config.config is first imported."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)
    if known.config is None:
        return
    if not os.path.exists(known.config):
        raise FileNotFoundError(f"Config file '{known.config}' not found")
    if "config.config" in sys.modules and os.environ.get(CONFIG_ENV) != known.config:
        logger.warning(f"Configuration already loaded in this process, '{known.config}' is ignored")
    os.environ[CONFIG_ENV] = known.config


def _flatten(row: dict) -> dict:
    flat = {}
    for key, value in row.items():
        if isinstance(value, list):
            flat.update({f"{key}_{j}": v for j, v in enumerate(value)})
        else:
            flat[key] = value
    return flat


def run(argv: list[str] | None = None) -> int:
    """
    Problem Definition: Analysis over the complex numbers, quaternions and octonions from the shell.
    Input: A subcommand with its flags.
    Output: One JSON object per result on stdout (or CSV with --out csv).
        Errors go to stderr as {"error": <class>, "message": <text>}.
    Exit codes: 0 success, 1 computation error, 2 usage error.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        _apply_config(argv)
    except (OSError, ValueError) as e:
        _error(e.__class__.__name__, str(e))
        return 2

    from cd_analysis.cli.commands import HANDLERS, UsageError, build_parser, to_json_line
    from cd_analysis.exceptions import ExpressionError

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _error("UsageError", str(e))
        return 2
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    try:
        rows = HANDLERS[args.command](args)
    except (UsageError, ExpressionError) as e:
        _error(e.__class__.__name__, str(e))
        return 2
    except Exception as e:
        _error(e.__class__.__name__, str(e))
        return 1

    if args.out == "csv":
        pd.DataFrame([_flatten(row) for row in rows]).to_csv(sys.stdout, index=False)
    else:
        for row in rows:
            print(to_json_line(row))
    sys.stdout.flush()

    if any(row.get("passed") is False for row in rows):
        return 1
    return 0


if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("'cd_analysis' program stopped.", file=sys.stderr)
        sys.exit(130)
