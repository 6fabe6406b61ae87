from django.conf import settings

from drf_yasg import openapi

description = """An API for minimum vertex-edge domination on convex bipartite graphs.

**Graphs**

A graph is sent as its side sizes `n1` and `n2`, its edges as `[i, j]`
pairs and optionally a convex ordering `yorder` of the Y side. Without a
`yorder` the ordering is searched exhaustively, which only works for small
Y sides.

**Vertices**

Vertices are named `x<i>` and `y<j>`, 1-based, in the labels of the
request.

**Errors**

Invalid input, graphs that are not convex and oracle capacities that are
exceeded all answer `400` with an error `code` and a `detail` message.
"""

info = openapi.Info(
    title=f"{settings.PROJECT_NAME} API",
    default_version=settings.API_VERSION,
    description=description,
    license=openapi.License(
        name="EUPL 1.2", url="https://opensource.org/licenses/EUPL-1.2"
    ),
)
