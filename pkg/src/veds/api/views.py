import logging

from drf_yasg.utils import swagger_auto_schema
from rest_framework.response import Response
from rest_framework.views import APIView

from veds.graphs.graph import is_ve_dominating_set
from veds.solver.dispatch import solve

from .serializers import (
    SolveRequestSerializer,
    SolveResultSerializer,
    VerifyRequestSerializer,
    VerifyResultSerializer,
)

logger = logging.getLogger(__name__)


class SolveView(APIView):
    """
    Compute a minimum VE-dominating set.

    The `baseline` algorithm returns one pivot per chain and is not always
    minimum. The `bruteforce` algorithm only accepts small graphs.
    """

    @swagger_auto_schema(
        request_body=SolveRequestSerializer, responses={200: SolveResultSerializer}
    )
    def post(self, request, *args, **kwargs):
        serializer = SolveRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        document = data["graph"]

        result = solve(
            document.graph,
            document.yorder,
            algorithm=data["algorithm"],
            memoize=data["memoize"],
        )
        output = SolveResultSerializer(result, context={"trace": data["trace"]})
        return Response(output.data)


class VerifyView(APIView):
    """
    Check whether a vertex set dominates every edge.
    """

    @swagger_auto_schema(
        request_body=VerifyRequestSerializer, responses={200: VerifyResultSerializer}
    )
    def post(self, request, *args, **kwargs):
        serializer = VerifyRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        document = serializer.validated_data["graph"]
        vertices = set(serializer.validated_data["vertices"])

        valid = is_ve_dominating_set(document.graph, vertices)
        output = VerifyResultSerializer({"valid": valid, "size": len(vertices)})
        return Response(output.data)
