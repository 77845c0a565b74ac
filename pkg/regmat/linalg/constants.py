# linalg/constants.py
import logging
import os

from django.conf import settings as django_settings  # type: ignore

logger = logging.getLogger("regmat." + __name__)


def _get_setting(name: str, default: int) -> int:
    """
    Allow linalg defaults to be overridden from Django settings.

    We look for REGMAT_* keys on django.conf.settings, but only if Django is
    configured (or DJANGO_SETTINGS_MODULE points at a settings module).
    Otherwise we silently fall back to the hard-coded defaults.

    """
    if django_settings is None:
        logger.debug(
            "Django settings unavailable, using default for %s=%s",
            name,
            default,
        )
        return default

    configured = getattr(django_settings, "configured", True) or (
        "DJANGO_SETTINGS_MODULE" in os.environ
    )
    if not configured:
        logger.debug(
            "Django settings not configured, using default for %s=%s",
            name,
            default,
        )
        return default

    value = getattr(django_settings, name, default)
    logger.debug("linalg setting %s=%s (default=%s)", name, value, default)
    return value


# Default config (can be overridden in Django settings)
TU_MINOR_LIMIT = _get_setting("REGMAT_TU_MINOR_LIMIT", 20_000_000)
SIGNING_NONZERO_LIMIT = _get_setting("REGMAT_SIGNING_NONZERO_LIMIT", 25)

logger.info(
    "linalg constants initialised",
    extra={
        "tu_minor_limit": TU_MINOR_LIMIT,
        "signing_nonzero_limit": SIGNING_NONZERO_LIMIT,
    },
)

# Field tags of the shared matrix text format
FIELD_Q = "Q"
FIELD_GF2 = "GF2"
FIELDS = (FIELD_Q, FIELD_GF2)

# Default axis label prefixes for matrices built from bare grids
ROW_PREFIX = "r"
COL_PREFIX = "c"
