import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from .constants import Side
from .exceptions import InputError

logger = logging.getLogger(__name__)

VERTEX_RE = re.compile(r"^(?P<side>[xXyY])(?P<index>\d+)$")


@dataclass(frozen=True, order=True)
class VertexRef:
    """
    A vertex named by its side and its 1-based ordinal on that side.

    Sorting puts every X vertex before every Y vertex.
    """

    side: str
    index: int

    def __str__(self):
        return f"{self.side}{self.index}"

    @classmethod
    def x(cls, index: int) -> "VertexRef":
        return cls(Side.x, index)

    @classmethod
    def y(cls, index: int) -> "VertexRef":
        return cls(Side.y, index)

    @classmethod
    def parse(cls, text: str) -> "VertexRef":
        match = VERTEX_RE.match(text.strip())
        if not match:
            raise InputError(f"'{text}' is not a vertex name, expected x<i> or y<j>")
        index = int(match.group("index"))
        if index < 1:
            raise InputError(f"vertex '{text}' must have an index of at least 1")
        return cls(match.group("side").lower(), index)


@dataclass(frozen=True)
class BipartiteGraph:
    n1: int
    n2: int
    # adj_x[i - 1] holds the sorted neighbours of x_i, adj_y likewise
    adj_x: Tuple[Tuple[int, ...], ...] = field(repr=False)
    adj_y: Tuple[Tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return sum(len(neighbours) for neighbours in self.adj_x)

    def neighbours_of_x(self, i: int) -> Tuple[int, ...]:
        return self.adj_x[i - 1]

    def neighbours_of_y(self, j: int) -> Tuple[int, ...]:
        return self.adj_y[j - 1]

    def neighbours(self, vertex: VertexRef) -> Tuple[VertexRef, ...]:
        self.check_vertex(vertex)
        if vertex.side == Side.x:
            return tuple(VertexRef.y(j) for j in self.neighbours_of_x(vertex.index))
        return tuple(VertexRef.x(i) for i in self.neighbours_of_y(vertex.index))

    def has_edge(self, i: int, j: int) -> bool:
        neighbours = self.adj_x[i - 1]
        # adjacency lists are sorted, but short enough that `in` is fine
        return j in neighbours

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i, neighbours in enumerate(self.adj_x, start=1):
            for j in neighbours:
                yield i, j

    def vertices(self) -> List[VertexRef]:
        return [VertexRef.x(i) for i in range(1, self.n1 + 1)] + [
            VertexRef.y(j) for j in range(1, self.n2 + 1)
        ]

    def check_vertex(self, vertex: VertexRef):
        size = self.n1 if vertex.side == Side.x else self.n2
        if vertex.side not in Side.values or not 1 <= vertex.index <= size:
            raise InputError(
                f"vertex {vertex} does not exist in a graph with "
                f"n1={self.n1}, n2={self.n2}"
            )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(
            (VertexRef.x(i), VertexRef.y(j)) for i, j in self.edges()
        )
        return graph


def build_graph(n1: int, n2: int, edges: Iterable[Tuple[int, int]]) -> BipartiteGraph:
    if n1 < 0 or n2 < 0:
        raise InputError(f"side sizes must be non-negative, got n1={n1}, n2={n2}")

    adj_x = [set() for _ in range(n1)]
    adj_y = [set() for _ in range(n2)]
    for i, j in edges:
        if not (1 <= i <= n1 and 1 <= j <= n2):
            raise InputError(
                f"edge ({i}, {j}) is out of range for n1={n1}, n2={n2}"
            )
        adj_x[i - 1].add(j)
        adj_y[j - 1].add(i)

    return BipartiteGraph(
        n1=n1,
        n2=n2,
        adj_x=tuple(tuple(sorted(neighbours)) for neighbours in adj_x),
        adj_y=tuple(tuple(sorted(neighbours)) for neighbours in adj_y),
    )


def parse_vertex_set(text: str) -> Tuple[VertexRef, ...]:
    """
    Parse ``"x1, y2 y3"`` style input: names separated by commas or whitespace.
    """
    names = [name for name in re.split(r"[\s,]+", text.strip()) if name]
    return tuple(sorted({VertexRef.parse(name) for name in names}))


def format_vertex_set(vertices: Iterable[VertexRef]) -> str:
    return "{" + ", ".join(str(vertex) for vertex in sorted(vertices)) + "}"


def is_ve_dominating_set(g: BipartiteGraph, d: Iterable[VertexRef]) -> bool:
    """
    Check that every edge xy has a member of ``d`` in N[x] or N[y].

    An edge is dominated when x is in D or has a neighbour in D, or when the
    same holds for y, so one pass over the adjacency marks both ends in O(m).
    """
    members = set(d)
    for vertex in members:
        g.check_vertex(vertex)

    chosen_x = {vertex.index for vertex in members if vertex.side == Side.x}
    chosen_y = {vertex.index for vertex in members if vertex.side == Side.y}

    x_covered = [
        i in chosen_x or any(j in chosen_y for j in g.neighbours_of_x(i))
        for i in range(1, g.n1 + 1)
    ]
    y_covered = [
        j in chosen_y or any(i in chosen_x for i in g.neighbours_of_y(j))
        for j in range(1, g.n2 + 1)
    ]
    return all(x_covered[i - 1] or y_covered[j - 1] for i, j in g.edges())


@dataclass(frozen=True)
class InducedSubgraph:
    graph: BipartiteGraph
    # new index -> original index, position 0 holds the original of vertex 1
    x_backward: Tuple[int, ...]
    y_backward: Tuple[int, ...]

    @property
    def x_forward(self) -> Dict[int, int]:
        return {original: new for new, original in enumerate(self.x_backward, start=1)}

    @property
    def y_forward(self) -> Dict[int, int]:
        return {original: new for new, original in enumerate(self.y_backward, start=1)}

    def lift(self, vertex: VertexRef) -> VertexRef:
        backward = self.x_backward if vertex.side == Side.x else self.y_backward
        return VertexRef(vertex.side, backward[vertex.index - 1])

    def lift_all(self, vertices: Iterable[VertexRef]) -> Tuple[VertexRef, ...]:
        return tuple(sorted(self.lift(vertex) for vertex in vertices))

    def restrict_order(self, yperm: Sequence[int]) -> Tuple[int, ...]:
        """
        Restrict an ordering of the original Y side to this subgraph, in new indices.
        """
        forward = self.y_forward
        return tuple(forward[j] for j in yperm if j in forward)


def induced_subgraph(
    g: BipartiteGraph, xs: Iterable[int], ys: Iterable[int]
) -> InducedSubgraph:
    x_backward = tuple(sorted(set(xs)))
    y_backward = tuple(sorted(set(ys)))
    for i in x_backward:
        if not 1 <= i <= g.n1:
            raise InputError(f"x{i} does not exist in a graph with n1={g.n1}")
    for j in y_backward:
        if not 1 <= j <= g.n2:
            raise InputError(f"y{j} does not exist in a graph with n2={g.n2}")

    y_forward = {original: new for new, original in enumerate(y_backward, start=1)}
    edges = [
        (new_i, y_forward[j])
        for new_i, i in enumerate(x_backward, start=1)
        for j in g.neighbours_of_x(i)
        if j in y_forward
    ]
    graph = build_graph(len(x_backward), len(y_backward), edges)
    return InducedSubgraph(graph=graph, x_backward=x_backward, y_backward=y_backward)


def connected_components(
    g: BipartiteGraph,
) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Split the vertex set into components, isolated vertices as singletons.

    Components come in the order of their smallest vertex, X before Y.
    """
    components = []
    for component in nx.connected_components(g.to_networkx()):
        xs = tuple(sorted(v.index for v in component if v.side == Side.x))
        ys = tuple(sorted(v.index for v in component if v.side == Side.y))
        components.append((min(component), xs, ys))

    components.sort(key=lambda item: item[0])
    return [(xs, ys) for _, xs, ys in components]


def is_connected(g: BipartiteGraph) -> bool:
    return len(connected_components(g)) <= 1
