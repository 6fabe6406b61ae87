import logging
from typing import Iterable, NamedTuple, Optional, Tuple

from .exceptions import InputError
from .graph import BipartiteGraph, build_graph

logger = logging.getLogger(__name__)

GRAPH_GRAMMAR = """\
Graph file format (UTF-8, one directive per line, '#' starts a comment):

  graph <n1> <n2>          first directive: sizes of the X and Y sides
  edge <i> <j>             an edge x<i> ~ y<j>, 1 <= i <= n1, 1 <= j <= n2
  yorder <j1> ... <jn2>    optional: a convex ordering of Y (a permutation)
"""


class GraphDocument(NamedTuple):
    graph: BipartiteGraph
    yorder: Optional[Tuple[int, ...]] = None


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(tokens, line_no: int, directive: str) -> Tuple[int, ...]:
    try:
        return tuple(int(token) for token in tokens)
    except ValueError as exc:
        raise InputError(
            f"line {line_no}: '{directive}' expects integers, got {' '.join(tokens)}"
        ) from exc


def parse_graph(text: str) -> GraphDocument:
    header = None
    edges = []
    yorder = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue

        directive, *tokens = line.split()
        if header is None:
            if directive != "graph":
                raise InputError(
                    f"line {line_no}: expected 'graph <n1> <n2>' first, got '{directive}'"
                )
            if len(tokens) != 2:
                raise InputError(f"line {line_no}: 'graph' takes exactly two sizes")
            header = _ints(tokens, line_no, directive)
            continue

        if directive == "edge":
            if len(tokens) != 2:
                raise InputError(f"line {line_no}: 'edge' takes exactly two indices")
            edges.append(_ints(tokens, line_no, directive))
        elif directive == "yorder":
            if yorder is not None:
                raise InputError(f"line {line_no}: 'yorder' given twice")
            yorder = _ints(tokens, line_no, directive)
        else:
            raise InputError(f"line {line_no}: unknown directive '{directive}'")

    if header is None:
        raise InputError("empty graph file, expected 'graph <n1> <n2>'")

    n1, n2 = header
    graph = build_graph(n1, n2, edges)
    logger.debug("Parsed graph with n1=%d, n2=%d, m=%d", n1, n2, graph.m)
    return GraphDocument(graph=graph, yorder=yorder)


def read_graph(path: str) -> GraphDocument:
    try:
        with open(path, "r", encoding="utf-8") as infile:
            text = infile.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file '{path}': {exc.strerror}") from exc
    return parse_graph(text)


def dump_graph(
    g: BipartiteGraph, yorder: Optional[Iterable[int]] = None, comment: str = ""
) -> str:
    """
    Canonical text: header, edges sorted by (i, j), then the optional yorder.
    """
    lines = [f"# {line}" for line in comment.splitlines()]
    lines.append(f"graph {g.n1} {g.n2}")
    lines.extend(f"edge {i} {j}" for i, j in g.edges())
    if yorder is not None:
        lines.append("yorder " + " ".join(str(j) for j in yorder))
    return "\n".join(lines) + "\n"


def write_graph(path: str, document: GraphDocument, comment: str = ""):
    with open(path, "w", encoding="utf-8") as outfile:
        outfile.write(dump_graph(document.graph, document.yorder, comment=comment))
