# blueprint/__init__.py
from __future__ import annotations

import logging

from .constants import MAX_SIZE, SEED, TRIALS
from .suite import PROPERTIES, mutant_short_pivot, run_property, run_suite

logger = logging.getLogger("regmat." + __name__)
logger.info(
    "blueprint package imported",
    extra={"properties": len(PROPERTIES)},
)

__all__ = [
    "MAX_SIZE",
    "PROPERTIES",
    "SEED",
    "TRIALS",
    "mutant_short_pivot",
    "run_property",
    "run_suite",
]
