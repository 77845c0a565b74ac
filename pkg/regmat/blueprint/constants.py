# blueprint/constants.py
import logging

from ..linalg.constants import _get_setting

logger = logging.getLogger("regmat." + __name__)

# Default config (can be overridden in Django settings)
SEED = _get_setting("REGMAT_BLUEPRINT_SEED", 0)
TRIALS = _get_setting("REGMAT_BLUEPRINT_TRIALS", 20)
MAX_SIZE = _get_setting("REGMAT_BLUEPRINT_MAX_SIZE", 5)

logger.info(
    "blueprint constants initialised",
    extra={"seed": SEED, "trials": TRIALS, "max_size": MAX_SIZE},
)

# Largest private block of a random 3-sum summand
SUM3_PRIVATE_MAX = 3
# Density of free entries in random 3-sum summands
SUM3_DENSITY = 0.35
SUM3_ATTEMPTS = 200
