API_VERSION = "1.0.0"

REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": ("rest_framework.renderers.JSONRenderer",),
    "DEFAULT_PARSER_CLASSES": ("rest_framework.parsers.JSONParser",),
    "DEFAULT_AUTHENTICATION_CLASSES": (),
    "DEFAULT_PERMISSION_CLASSES": ("rest_framework.permissions.AllowAny",),
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_VERSIONING_CLASS": "rest_framework.versioning.URLPathVersioning",
    "ALLOWED_VERSIONS": ("1",),
    "DEFAULT_VERSION": "1",
    "EXCEPTION_HANDLER": "veds.api.exceptions.exception_handler",
}

SWAGGER_SETTINGS = {
    "DEFAULT_INFO": "veds.api.schema.info",
    "SECURITY_DEFINITIONS": None,
    "USE_SESSION_AUTH": False,
}
