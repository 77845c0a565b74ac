# __init__.py (root package)
import logging

from .errors import RegmatError
from .linalg import BinMatrix, RatMatrix, find_tu_signing, is_tu
from .matroid import StandardRepr, eval_good_tree

__version__ = "v0.1.0"

logger = logging.getLogger("regmat." + __name__)
logger.info(
    "regmat root package imported",
    extra={
        "version": __version__,
    },
)

__all__ = [
    "BinMatrix",
    "RatMatrix",
    "RegmatError",
    "StandardRepr",
    "eval_good_tree",
    "find_tu_signing",
    "is_tu",
]
