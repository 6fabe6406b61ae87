from django.urls import include, path, re_path

from drf_yasg.views import get_schema_view
from rest_framework import permissions

from .schema import info
from .views import SolveView, VerifyView

SchemaView = get_schema_view(
    info, public=True, permission_classes=(permissions.AllowAny,)
)

urlpatterns = [
    re_path(
        r"^v(?P<version>\d+)/",
        include(
            [
                # API documentation
                re_path(
                    r"^schema/openapi(?P<format>\.json|\.yaml)$",
                    SchemaView.without_ui(cache_timeout=None),
                    name="schema-json",
                ),
                path(
                    "schema/",
                    SchemaView.with_ui("redoc", cache_timeout=None),
                    name="schema-redoc",
                ),
                # actual API
                path("solve", SolveView.as_view(), name="solve"),
                path("verify", VerifyView.as_view(), name="verify"),
            ]
        ),
    )
]
