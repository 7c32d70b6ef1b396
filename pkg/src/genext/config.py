"""
Configuration module for the generic exterior algebra engine.
Loads environment variables and provides centralized configuration.

Every value can be overridden by a ``GENEXT_*`` environment variable (or a
``.env`` file); command-line flags take precedence over both.
"""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent.parent
EXPECTED_DIR = Path(os.getenv("GENEXT_EXPECTED_DIR", str(BASE_DIR / "data" / "expected")))

# Field and randomness
# The published calculations were performed in characteristic 31991
PRIME = int(os.getenv("GENEXT_PRIME", "31991"))
MASTER_SEED = int(os.getenv("GENEXT_SEED", "0xC0FFEE"), 0)
TRIALS = int(os.getenv("GENEXT_TRIALS", "3"))

# Execution
WORKERS = int(os.getenv("GENEXT_WORKERS", str(os.cpu_count() or 1)))
OUTPUT_FORMAT = os.getenv("GENEXT_FORMAT", "plain")
DEGREE_CAP = int(os.getenv("GENEXT_DEGREE_CAP", "30"))

# Feasibility guard: rows*cols of the largest multiplication matrix in a cell
MAX_MATRIX_ENTRIES = int(os.getenv("GENEXT_MAX_MATRIX_ENTRIES", "20000000"))
EXTENDED_MAX_MATRIX_ENTRIES = int(os.getenv("GENEXT_EXTENDED_MAX_MATRIX_ENTRIES", "250000000"))

# Caching Configuration
CACHE_ENABLED = os.getenv("GENEXT_CACHE_ENABLED", "True").lower() == "true"
CACHE_MAX_SIZE = int(os.getenv("GENEXT_CACHE_MAX_SIZE", "2048"))

# Metrics Configuration
METRICS_ENABLED = os.getenv("GENEXT_METRICS_ENABLED", "True").lower() == "true"

# Logging Configuration
# Logs go to stderr so that reports on stdout stay byte-identical between runs
LOG_LEVEL = getattr(logging, os.getenv("GENEXT_LOG_LEVEL", "INFO").upper(), logging.INFO)
# Format includes filename:lineno for traceability
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"

# Configure logging
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)

logger = logging.getLogger(__name__)
logger.debug("ℹ️ Configuration loaded successfully")
logger.debug("ℹ️ Expected tables path: %s", EXPECTED_DIR)
logger.debug("ℹ️ Prime field: F_%s, master seed %#x, trials %s", PRIME, MASTER_SEED, TRIALS)
if not CACHE_ENABLED:
    logger.debug("⚠️ GENEXT_CACHE_ENABLED=False: rank profiles are recomputed for every cell")
