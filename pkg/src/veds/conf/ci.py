import os

os.environ.setdefault("SECRET_KEY", "veds-ci-secret-key")

from .base import *  # noqa isort:skip

#
# Standard Django settings.
#

DEBUG = False

ALLOWED_HOSTS = ["testserver"]

LOGGING["loggers"].update(
    {
        "django": {"handlers": ["django"], "level": "WARNING", "propagate": True},
        "veds": {"handlers": ["project"], "level": "WARNING", "propagate": True},
    }
)

#
# Custom settings
#

ENVIRONMENT = "ci"
