import os
import sys

os.environ.setdefault(
    "SECRET_KEY", "8x$z4^l@d0u&t2c!m9#e-veds-development-only-key-q7w1r5y3"
)

from .base import *  # noqa isort:skip

#
# Standard Django settings.
#

DEBUG = True

ALLOWED_HOSTS = ["localhost", "127.0.0.1", "testserver"]

LOGGING["loggers"].update(
    {
        "veds": {"handlers": ["console"], "level": "DEBUG", "propagate": True},
        "django": {"handlers": ["console"], "level": "INFO", "propagate": True},
        "django.utils.autoreload": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
        "performance": {"handlers": ["console"], "level": "INFO", "propagate": True},
    }
)

#
# Custom settings
#
ENVIRONMENT = "development"

#
# Library settings
#

REST_FRAMEWORK["DEFAULT_RENDERER_CLASSES"] += (
    "rest_framework.renderers.BrowsableAPIRenderer",
)

if "test" in sys.argv:
    # keep the test output readable, solver recursion logs at DEBUG
    LOGGING["loggers"]["veds"]["level"] = "WARNING"

# Override settings with local settings.
try:
    from .local import *  # noqa
except ImportError:
    pass
