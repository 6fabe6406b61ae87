import logging

from rest_framework.exceptions import ValidationError
from rest_framework.views import exception_handler as drf_exception_handler

from veds.graphs.exceptions import VedsError

logger = logging.getLogger(__name__)


def exception_handler(exc, context):
    """
    Turn library errors into 400 responses carrying the error code.
    """
    if isinstance(exc, VedsError):
        logger.info("Rejected request: %s", exc)
        exc = ValidationError({"code": exc.code, "detail": str(exc)})
    return drf_exception_handler(exc, context)
