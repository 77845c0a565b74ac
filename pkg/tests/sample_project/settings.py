SECRET_KEY = "Not_a_secret_key"

DEBUG = True

INSTALLED_APPS = [
    "django.contrib.contenttypes",
]

DATABASES = {}

USE_TZ = True

# REGMAT
REGMAT_TU_MINOR_LIMIT = 2_000_000
REGMAT_SIGNING_NONZERO_LIMIT = 25
REGMAT_BLUEPRINT_TRIALS = 5

# Turn logging on to see why a check failed

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose_regmat_tests": {
            "format": "REGMAT: [%(levelname)s] %(pathname)s:%(lineno)d %(funcName)s(): %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
        },
        "console_regmat_tests": {
            "class": "logging.StreamHandler",
            "formatter": "verbose_regmat_tests",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "regmat": {
            "handlers": ["console_regmat_tests"],
            "level": "INFO",
            "propagate": False,
        },
    },
}
