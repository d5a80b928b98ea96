
import math
import os


from .utils.config.get_config import get_config as config
from logger.logger import Logger
logger = Logger(logger_name=__name__)


# Define hard-coded constants
script_dir = os.path.dirname(os.path.realpath(__file__))
PROJECT_ROOT = os.path.dirname(script_dir)
DEBUG_FILEPATH: str = os.path.join(PROJECT_ROOT, "debug_logs")
PROGRAM_NAME = "cd_analysis"


# Get YAML config variables
try:
    path = "SYSTEM"
    THREADS: int = int(os.environ.get("CDANALYSIS_THREADS") or config(path, 'THREADS') or 4)


    path = "NUMERICS"
    REL_TOL: float = config(path, 'REL_TOL') or 1e-12
    ABS_TOL: float = config(path, 'ABS_TOL') or 1e-14
    ZERO_EPSILON: float = config(path, 'ZERO_EPSILON') or 1e-300
    IMAG_CUTOFF: float = config(path, 'IMAG_CUTOFF') or 1e-13
    SERIES_MAX_TERMS: int = config(path, 'SERIES_MAX_TERMS') or 100_000
    SERIES_STOP: float = config(path, 'SERIES_STOP') or 1e-16
    FD_STEP_SCALE: float = config(path, 'FD_STEP_SCALE') or 1e-5
    RE_PART_TOL: float = config(path, 'RE_PART_TOL') or 1e-9
    DEGENERATE_SINE_EPS: float = config(path, 'DEGENERATE_SINE_EPS') or 1e-12


    path = "CONTOUR"
    INITIAL_SAMPLES: int = config(path, 'INITIAL_SAMPLES') or 64
    MAX_SAMPLES: int = config(path, 'MAX_SAMPLES') or 2**20
    LINE_INTEGRAL_TOL: float = config(path, 'LINE_INTEGRAL_TOL') or 1e-10
    UNWRAP_THRESHOLD: float = math.pi


    path = "TRANSFORM"
    QUAD_TOL: float = config(path, 'QUAD_TOL') or 1e-10
    QUAD_LIMIT: int = config(path, 'QUAD_LIMIT') or 200
    INITIAL_TRUNCATION: float = config(path, 'INITIAL_TRUNCATION') or 16.0
    MAX_DOUBLINGS: int = config(path, 'MAX_DOUBLINGS') or 16


    path = "SPECIAL"
    EULER_GAMMA: float = config(path, 'EULER_GAMMA') or 0.5772156649015329
    GAMMA_MIN_FACTORS: int = config(path, 'GAMMA_MIN_FACTORS') or 64
    THETA_STOP: float = config(path, 'THETA_STOP') or 1e-18
    BISECTION_WIDTH: float = config(path, 'BISECTION_WIDTH') or 1e-6


    path = "PRIVATE_FOLDER_PATHS"
    OUTPUT_FOLDER: str = config(path, 'OUTPUT_FOLDER') or os.path.join(PROJECT_ROOT, "output")

    # Create output subfolders if they don't exist.
    CSV_OUTPUT_FOLDER = os.path.join(OUTPUT_FOLDER, "csv")
    for folder in [OUTPUT_FOLDER, CSV_OUTPUT_FOLDER]:
        if not os.path.exists(folder):
            os.makedirs(folder)
            logger.info(f"{folder} created.")

    logger.debug("YAML configs loaded.")

except KeyError as e:
    logger.exception(f"Missing configuration item: {e}")

except Exception as e:
    logger.exception(f"Could not load configs: {e}")
    raise e
