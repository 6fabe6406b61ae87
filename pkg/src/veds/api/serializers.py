"""
The JSON schema shared by the command line and the HTTP API.

Vertices are always written as ``x<i>`` / ``y<j>`` in the labels of the
input file.
"""
from rest_framework import serializers

from veds.graphs.constants import Algorithm, Branch
from veds.graphs.exceptions import InputError
from veds.graphs.formats import GraphDocument
from veds.graphs.graph import VertexRef, build_graph


def choice_values_help_text(choices) -> str:
    return "\n".join(f"* `{value}` - {label}" for value, label in choices.choices)


class VertexField(serializers.Field):
    default_error_messages = {"invalid": "Expected a vertex name such as 'x1' or 'y2'."}

    def to_representation(self, value: VertexRef) -> str:
        return str(value)

    def to_internal_value(self, data) -> VertexRef:
        if not isinstance(data, str):
            self.fail("invalid")
        try:
            return VertexRef.parse(data)
        except InputError as exc:
            raise serializers.ValidationError(str(exc)) from exc


class GraphDocumentSerializer(serializers.Serializer):
    n1 = serializers.IntegerField(min_value=0)
    n2 = serializers.IntegerField(min_value=0)
    edges = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(), min_length=2, max_length=2
        ),
        help_text="Edges as `[i, j]` pairs, meaning x<i> ~ y<j>.",
    )
    yorder = serializers.ListField(
        child=serializers.IntegerField(),
        required=False,
        allow_null=True,
        help_text="A convex ordering of the Y side, a permutation of 1..n2.",
    )

    def validate(self, attrs) -> GraphDocument:
        try:
            edges = [tuple(edge) for edge in attrs["edges"]]
            graph = build_graph(attrs["n1"], attrs["n2"], edges)
        except InputError as exc:
            raise serializers.ValidationError({"edges": str(exc)}) from exc
        yorder = attrs.get("yorder")
        yorder = tuple(yorder) if yorder is not None else None
        return GraphDocument(graph=graph, yorder=yorder)

    def to_representation(self, document: GraphDocument):
        return {
            "n1": document.graph.n1,
            "n2": document.graph.n2,
            "edges": [list(edge) for edge in document.graph.edges()],
            "yorder": list(document.yorder) if document.yorder is not None else None,
        }


class TraceStepSerializer(serializers.Serializer):
    x_start = serializers.IntegerField(allow_null=True)
    y_start = serializers.IntegerField(allow_null=True)
    branch = serializers.ChoiceField(choices=Branch.choices)
    chosen = VertexField(allow_null=True)


class SolveResultSerializer(serializers.Serializer):
    gamma_ve = serializers.IntegerField()
    witness = serializers.ListField(child=VertexField())
    algorithm = serializers.ChoiceField(choices=Algorithm.choices)
    elapsed_ms = serializers.FloatField()
    states = serializers.IntegerField()
    trace = TraceStepSerializer(many=True, required=False)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if not self.context.get("trace"):
            data.pop("trace")
        return data


class SolveRequestSerializer(serializers.Serializer):
    graph = GraphDocumentSerializer()
    algorithm = serializers.ChoiceField(
        choices=Algorithm.choices,
        default=Algorithm.exact,
        help_text=choice_values_help_text(Algorithm),
    )
    memoize = serializers.BooleanField(default=True)
    trace = serializers.BooleanField(default=False)


class VerifyRequestSerializer(serializers.Serializer):
    graph = GraphDocumentSerializer()
    vertices = serializers.ListField(child=VertexField(), allow_empty=True)


class VerifyResultSerializer(serializers.Serializer):
    valid = serializers.BooleanField()
    size = serializers.IntegerField()


class LexConvexOrderingSerializer(serializers.Serializer):
    xperm = serializers.ListField(child=serializers.IntegerField())
    yperm = serializers.ListField(child=serializers.IntegerField())
    left_x = serializers.ListField(child=serializers.IntegerField(allow_null=True))
    right_x = serializers.ListField(child=serializers.IntegerField(allow_null=True))


class ChainSerializer(serializers.Serializer):
    xs = serializers.ListField(child=serializers.IntegerField())
    ys = serializers.ListField(child=serializers.IntegerField())
    pivot = serializers.IntegerField()


class ChainDecompositionSerializer(serializers.Serializer):
    chains = ChainSerializer(many=True)
    isolated_sets = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField())
    )
    tail_isolated = serializers.ListField(child=VertexField())
    stranded_y = serializers.ListField(child=serializers.IntegerField())


class ClauseResultSerializer(serializers.Serializer):
    chain = serializers.IntegerField()
    clause = serializers.CharField()
    passed = serializers.BooleanField()
    vacuous = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class LemmaReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    results = ClauseResultSerializer(many=True)


class ReductionSerializer(serializers.Serializer):
    kind = serializers.CharField()
    p = serializers.IntegerField(source="set_system.p")
    q = serializers.IntegerField(source="set_system.q")
    n1 = serializers.IntegerField(source="graph.n1")
    n2 = serializers.IntegerField(source="graph.n2")
    m = serializers.IntegerField(source="graph.m")
    vertex_count = serializers.IntegerField()
    coverless = serializers.BooleanField()
    roles = serializers.SerializerMethodField()
    certified = serializers.SerializerMethodField()

    def get_roles(self, artifact):
        return {role: str(vertex) for role, vertex in artifact.roles.items()}

    def get_certified(self, artifact):
        return self.context.get("certified")


class SetCoverSerializer(serializers.Serializer):
    cover = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    size = serializers.IntegerField(allow_null=True)


class TrialOutcomeSerializer(serializers.Serializer):
    index = serializers.IntegerField()
    label = serializers.CharField()
    n1 = serializers.IntegerField()
    n2 = serializers.IntegerField()
    m = serializers.IntegerField()
    exact = serializers.IntegerField(allow_null=True)
    oracle = serializers.IntegerField(allow_null=True)
    baseline = serializers.IntegerField(allow_null=True)
    error = serializers.CharField(allow_blank=True)
    instance = serializers.CharField(allow_blank=True)


class CrossCheckReportSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    size_cap = serializers.IntegerField()
    trials = serializers.IntegerField()
    agreements = serializers.IntegerField()
    disagreements = TrialOutcomeSerializer(many=True)
    baseline_gaps = serializers.SerializerMethodField()
    max_baseline_gap = serializers.IntegerField()

    def get_baseline_gaps(self, report):
        # JSON object keys are strings
        return {str(gap): count for gap, count in report.baseline_gaps.items()}


class BenchRowSerializer(serializers.Serializer):
    n1 = serializers.IntegerField()
    n2 = serializers.IntegerField()
    m = serializers.IntegerField()
    density = serializers.FloatField()
    gamma_ve = serializers.IntegerField()
    states = serializers.IntegerField()
    elapsed_ms = serializers.FloatField()


class BenchReportSerializer(serializers.Serializer):
    memoize = serializers.BooleanField()
    rows = BenchRowSerializer(many=True)
    total_ms = serializers.FloatField()
    mean_ms = serializers.FloatField()
    max_ms = serializers.FloatField()
    slope = serializers.FloatField(allow_null=True)
