# matroid/constants.py
import logging

from ..linalg.constants import _get_setting

logger = logging.getLogger("regmat." + __name__)

# Default config (can be overridden in Django settings)
GROUND_LIMIT = _get_setting("REGMAT_MATROID_GROUND_LIMIT", 20)
AXIOM_GROUND_LIMIT = _get_setting("REGMAT_AXIOM_GROUND_LIMIT", 12)

logger.info(
    "matroid constants initialised",
    extra={
        "ground_limit": GROUND_LIMIT,
        "axiom_ground_limit": AXIOM_GROUND_LIMIT,
    },
)

# Provenance tags of constructed matroids
VECTOR = "vector"
STANDARD = "standard"
DUAL = "dual"
ORTHOGONAL_DUAL = "orthogonal-dual"

# Fixed labels of R10
R10_ROWS = ("x1", "x2", "x3", "x4", "x5")
R10_COLS = ("y1", "y2", "y3", "y4", "y5")
