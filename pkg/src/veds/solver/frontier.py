"""
Frontier indices of a connected lex-convex ordering and the two suffix
subproblems they define.

Every index is a position in the ordering, not a vertex label.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from veds.graphs.constants import Branch
from veds.graphs.decomposition import ChainDecomposition, leading_chain
from veds.graphs.exceptions import ContractError
from veds.graphs.graph import BipartiteGraph, InducedSubgraph, induced_subgraph
from veds.graphs.ordering import LexConvexOrdering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrontierIndices:
    r_prime: int
    r: int
    s: int
    l: Optional[int]
    p: Optional[int]
    alpha: Optional[int]
    k_alpha: Optional[int]
    l_alpha: Optional[int]


def frontier_indices(
    g: BipartiteGraph,
    ordering: LexConvexOrdering,
    decomposition: Optional[ChainDecomposition] = None,
    assume_connected: bool = False,
) -> FrontierIndices:
    if g.m == 0:
        raise ContractError("frontier indices need at least one edge")

    if decomposition is not None and decomposition.chains:
        isolated = decomposition.isolated_sets[0]
    else:
        _, isolated = leading_chain(g, ordering, assume_connected=assume_connected)
    return frontier_of(ordering, isolated)


def frontier_of(
    ordering: LexConvexOrdering, isolated: Sequence[int]
) -> FrontierIndices:
    """
    Frontier indices of a connected ordering whose J_1 holds the X vertices
    ``isolated``.
    """
    n1, n2 = len(ordering.xperm), len(ordering.yperm)
    r_prime = ordering.right(1)
    r = ordering.right_of_y(1)
    s = ordering.right(r)
    if s < n2:
        l = ordering.left_of_y(s + 1)
        p = ordering.right_of_y(s + 1)
    else:
        l = p = None

    # J_1 as X-positions; with J_1 empty every q qualifies and alpha = r_prime
    x_position = ordering.x_position
    spans = [
        (ordering.left(x_position[x]), ordering.right(x_position[x])) for x in isolated
    ]
    alpha = next(
        (
            q
            for q in range(r_prime, 0, -1)
            if all(left <= q <= right for left, right in spans)
        ),
        None,
    )

    k_alpha = l_alpha = None
    if alpha is not None:
        k_alpha = ordering.right_of_y(alpha)
        if k_alpha < n1:
            l_alpha = ordering.left(k_alpha + 1)

    return FrontierIndices(
        r_prime=r_prime,
        r=r,
        s=s,
        l=l,
        p=p,
        alpha=alpha,
        k_alpha=k_alpha,
        l_alpha=l_alpha,
    )


def suffix_vertices(
    ordering: LexConvexOrdering, x_from: int, y_from: int
) -> Tuple[List[int], List[int]]:
    """
    X and Y labels of the suffix from positions ``x_from`` and ``y_from``,
    without the vertices it leaves isolated.
    """
    n1 = len(ordering.xperm)
    positions = [
        p
        for p in range(x_from, n1 + 1)
        if ordering.right(p) is not None and ordering.right(p) >= y_from
    ]
    # lex order sorts by left end, so one sweep merges the clipped intervals
    ys = []
    reach = y_from - 1
    for p in positions:
        start = max(ordering.left(p), reach + 1)
        end = ordering.right(p)
        ys.extend(ordering.y_at(q) for q in range(start, end + 1))
        reach = max(reach, end)
    return [ordering.x_at(p) for p in positions], ys


def _suffix(
    g: BipartiteGraph, ordering: LexConvexOrdering, x_from: int, y_from: int
) -> InducedSubgraph:
    return induced_subgraph(g, *suffix_vertices(ordering, x_from, y_from))


def reduce_to_suffix(
    g: BipartiteGraph, ordering: LexConvexOrdering, fi: FrontierIndices, branch: str
) -> InducedSubgraph:
    """
    The subproblem left after choosing x_r (``Branch.gprime``) or y_alpha
    (``Branch.gtilde``), with isolated vertices dropped.

    The translation maps of the returned subgraph are in the labels of ``g``.
    """
    if branch == Branch.gprime:
        if fi.l is None:
            return induced_subgraph(g, (), ())
        return _suffix(g, ordering, fi.l, fi.s + 1)

    if branch == Branch.gtilde:
        if fi.alpha is None:
            raise ContractError("no vertex of N(x1) sees all of J1, G~ is undefined")
        if fi.l_alpha is None:
            return induced_subgraph(g, (), ())
        return _suffix(g, ordering, fi.k_alpha + 1, fi.l_alpha)

    raise ContractError(f"unknown branch '{branch}'")
