"""
Exact minimum VE-domination on convex bipartite graphs.

Each subproblem is an induced subgraph of the input, named by its X and Y
vertex sets. A subproblem is solved by the first rule that applies:

* no edges: 0
* disconnected: the sum over its components
* a vertex adjacent to the whole opposite side: 1
* otherwise 1 + the better of G' (x_r chosen) and G~ (y_alpha chosen),
  G' winning ties.

Subproblems are evaluated bottom-up with an explicit stack, so deep
recursions do not hit the interpreter's recursion limit.
"""
import bisect
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from veds.graphs.constants import Algorithm, Branch
from veds.graphs.decomposition import peel_chains
from veds.graphs.exceptions import ContractError
from veds.graphs.graph import BipartiteGraph, VertexRef, is_ve_dominating_set
from veds.graphs.ordering import LexConvexOrdering, check_lex_convex_ordering

from .frontier import frontier_of, suffix_vertices
from .results import SolveResult, TraceStep

logger = logging.getLogger(__name__)

EMPTY = "empty"
BRANCHING = "branching"


@dataclass
class _Node:
    xs: Tuple[int, ...]
    ys: Tuple[int, ...]
    kind: Optional[str] = None
    children: Tuple[int, ...] = ()
    # chosen[i] joins the witness when children[i] is taken
    chosen: Tuple[Optional[VertexRef], ...] = ()
    value: Optional[int] = None
    decision: int = 0
    expanded: bool = field(default=False, repr=False)


def _components(ordering: LexConvexOrdering) -> List[Tuple[List[int], range]]:
    """
    Components of an ordering without isolated vertices, by sweeping the
    X intervals in lex order.
    """
    components = []
    xs = []
    y_from = reach = None
    for position in range(1, len(ordering.xperm) + 1):
        left, right = ordering.left(position), ordering.right(position)
        if xs and left > reach:
            components.append((xs, range(y_from, reach + 1)))
            xs = []
        if not xs:
            y_from, reach = left, right
        xs.append(position)
        reach = max(reach, right)
    if xs:
        components.append((xs, range(y_from, reach + 1)))
    return components


def _paint(cells: List[Optional[int]], spans):
    """
    Write each ``(value, first, last)`` span into the cells of its 1-based
    range that no earlier span wrote, so every cell keeps its first writer.
    """
    # following unwritten[q] from q reaches the first unwritten cell >= q
    unwritten = list(range(len(cells) + 1))

    def find(q):
        root = q
        while unwritten[root] != root:
            root = unwritten[root]
        while unwritten[q] != root:
            unwritten[q], q = root, unwritten[q]
        return root

    for value, first, last in spans:
        q = find(first - 1)
        while q < last:
            cells[q] = value
            unwritten[q] = q + 1
            q = find(q + 1)


class _ExactSolver:
    """
    States are vertex sets of the input. The lex-convex ordering of a state
    is cut out of the input ordering, never recomputed from its edges.
    """

    def __init__(self, g: BipartiteGraph, ordering: LexConvexOrdering, memoize: bool):
        self.g = g
        self.ordering = ordering
        self.memoize = memoize
        self.nodes: List[_Node] = []
        self.index: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
        self.x_position = ordering.x_position
        self.y_position = ordering.y_position
        self.intervals = {
            x: (ordering.left(position), ordering.right(position))
            for x, position in self.x_position.items()
        }

    def node_for(self, xs, ys) -> int:
        key = (tuple(sorted(xs)), tuple(sorted(ys)))
        if self.memoize and key in self.index:
            return self.index[key]
        self.nodes.append(_Node(xs=key[0], ys=key[1]))
        number = len(self.nodes) - 1
        if self.memoize:
            self.index[key] = number
        return number

    def local_ordering(self, xs, ys) -> LexConvexOrdering:
        """
        The lex-convex ordering of the state ``(xs, ys)``, in input labels.
        """
        y_positions = sorted(self.y_position[y] for y in ys)
        clipped = {}
        for x in xs:
            left, right = self.intervals[x]
            if left is None:
                clipped[x] = (None, None)
                continue
            first = bisect.bisect_left(y_positions, left) + 1
            last = bisect.bisect_right(y_positions, right)
            clipped[x] = (first, last) if first <= last else (None, None)

        # same key as the bucket passes of compute_lex_convex_ordering
        xperm = tuple(
            sorted(xs, key=lambda x: (clipped[x][0] or 0, clipped[x][1] or 0, x))
        )
        spans = [
            (position, *clipped[x])
            for position, x in enumerate(xperm, start=1)
            if clipped[x][0] is not None
        ]
        left_y = [None] * len(y_positions)
        right_y = [None] * len(y_positions)
        _paint(left_y, spans)
        _paint(right_y, reversed(spans))

        return LexConvexOrdering(
            xperm=xperm,
            yperm=tuple(self.ordering.y_at(q) for q in y_positions),
            left_x=tuple(clipped[x][0] for x in xperm),
            right_x=tuple(clipped[x][1] for x in xperm),
            left_y=tuple(left_y),
            right_y=tuple(right_y),
        )

    def expand(self, node: _Node):
        node.expanded = True
        if not node.xs or not node.ys:
            node.kind, node.value = EMPTY, 0
            return

        ordering = self.local_ordering(node.xs, node.ys)
        n1, n2 = len(ordering.xperm), len(ordering.yperm)

        components = _components(ordering)
        if len(components) > 1:
            node.kind = Branch.component_split
            node.children = tuple(
                self.node_for(
                    [ordering.x_at(p) for p in positions],
                    [ordering.y_at(q) for q in y_range],
                )
                for positions, y_range in components
            )
            node.chosen = (None,) * len(node.children)
            return

        universal = [
            VertexRef.x(ordering.x_at(p))
            for p in range(1, n1 + 1)
            if ordering.left(p) == 1 and ordering.right(p) == n2
        ]
        if not universal:
            # y sees every x when it lies in every interval
            first, last = max(ordering.left_x), min(ordering.right_x)
            universal = [VertexRef.y(ordering.y_at(q)) for q in range(first, last + 1)]
        if universal:
            node.kind, node.value = Branch.universal, 1
            node.chosen = (min(universal),)
            return

        leading = peel_chains(ordering, max_chains=1)
        fi = frontier_of(ordering, leading.isolated_sets[0])
        children = [self.suffix_node(ordering, fi.l, fi.s + 1)]
        chosen = [VertexRef.x(ordering.x_at(fi.r))]
        if fi.alpha is not None:
            children.append(self.suffix_node(ordering, fi.k_alpha + 1, fi.l_alpha))
            chosen.append(VertexRef.y(ordering.y_at(fi.alpha)))
        node.kind = BRANCHING
        node.children = tuple(children)
        node.chosen = tuple(chosen)

    def suffix_node(self, ordering, x_from, y_from) -> int:
        if x_from is None or y_from is None:
            return self.node_for((), ())
        return self.node_for(*suffix_vertices(ordering, x_from, y_from))

    def resolve(self, node: _Node):
        values = [self.nodes[child].value for child in node.children]
        if node.kind == Branch.component_split:
            node.value = sum(values)
            return
        # min() keeps the first of equal values, so G' wins ties
        node.decision = min(range(len(values)), key=values.__getitem__)
        node.value = 1 + values[node.decision]

    def evaluate(self, root: int):
        stack = [root]
        while stack:
            node = self.nodes[stack[-1]]
            if node.value is not None:
                stack.pop()
                continue
            if not node.expanded:
                self.expand(node)
                if node.value is not None:
                    stack.pop()
                    continue
            pending = [
                child for child in node.children if self.nodes[child].value is None
            ]
            if pending:
                stack.extend(pending)
                continue
            self.resolve(node)
            stack.pop()

    def step(self, node: _Node, branch: str, chosen: Optional[VertexRef]) -> TraceStep:
        return TraceStep(
            x_start=min(self.x_position[x] for x in node.xs),
            y_start=min(self.y_position[y] for y in node.ys),
            branch=branch,
            chosen=chosen,
        )

    def extract(self, root: int) -> Tuple[List[VertexRef], List[TraceStep]]:
        witness = []
        trace = []
        stack = [root]
        while stack:
            node = self.nodes[stack.pop()]
            if node.kind == EMPTY:
                continue
            if node.kind == Branch.universal:
                witness.append(node.chosen[0])
                trace.append(self.step(node, Branch.universal, node.chosen[0]))
            elif node.kind == Branch.component_split:
                trace.append(self.step(node, Branch.component_split, None))
                stack.extend(reversed(node.children))
            else:
                chosen = node.chosen[node.decision]
                branch = Branch.gprime if node.decision == 0 else Branch.gtilde
                witness.append(chosen)
                trace.append(self.step(node, branch, chosen))
                stack.append(node.children[node.decision])
        return witness, trace


def solve_exact(
    g: BipartiteGraph, ordering: LexConvexOrdering, memoize: bool = True
) -> SolveResult:
    check_lex_convex_ordering(g, ordering)

    solver = _ExactSolver(g, ordering, memoize=memoize)
    root = solver.node_for(
        [i for i in range(1, g.n1 + 1) if g.neighbours_of_x(i)],
        [j for j in range(1, g.n2 + 1) if g.neighbours_of_y(j)],
    )
    solver.evaluate(root)
    witness, trace = solver.extract(root)

    gamma_ve = solver.nodes[root].value
    if len(set(witness)) != gamma_ve or not is_ve_dominating_set(g, witness):
        raise ContractError(
            f"exact solver produced an invalid witness of size {len(witness)} "
            f"for gamma_ve={gamma_ve}"
        )

    logger.debug(
        "Exact solve on n1=%d, n2=%d, m=%d: gamma_ve=%d over %d states",
        g.n1,
        g.n2,
        g.m,
        gamma_ve,
        len(solver.nodes),
    )
    return SolveResult(
        gamma_ve=gamma_ve,
        witness=tuple(sorted(witness)),
        algorithm=Algorithm.exact,
        trace=tuple(trace),
        states=len(solver.nodes),
    )
