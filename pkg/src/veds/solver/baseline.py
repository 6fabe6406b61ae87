import logging
from typing import Optional

from veds.graphs.constants import Algorithm, Branch
from veds.graphs.decomposition import ChainDecomposition, decompose
from veds.graphs.exceptions import ContractError
from veds.graphs.graph import BipartiteGraph, VertexRef, is_ve_dominating_set
from veds.graphs.ordering import LexConvexOrdering

from .results import SolveResult, TraceStep

logger = logging.getLogger(__name__)


def solve_baseline(
    g: BipartiteGraph,
    ordering: LexConvexOrdering,
    decomposition: Optional[ChainDecomposition] = None,
) -> SolveResult:
    """
    One pivot per chain: the rightmost neighbour of the chain's first Y vertex.

    The pivots always dominate every edge but are not always a minimum set,
    the counterexample fixture needs 2 pivots where ``{y2}`` suffices.
    """
    if g.m == 0:
        raise ContractError("the chain baseline needs a graph with at least one edge")
    if decomposition is None:
        decomposition = decompose(g, ordering)

    x_position = ordering.x_position
    y_position = ordering.y_position
    witness = []
    trace = []
    for chain in decomposition.chains:
        pivot = VertexRef.x(chain.pivot)
        witness.append(pivot)
        trace.append(
            TraceStep(
                x_start=min(x_position[x] for x in chain.xs),
                y_start=min(y_position[y] for y in chain.ys),
                branch=Branch.chain,
                chosen=pivot,
            )
        )

    if not is_ve_dominating_set(g, witness):
        raise ContractError(
            "chain pivots do not dominate every edge: "
            + ", ".join(str(vertex) for vertex in witness)
        )

    logger.debug("Chain baseline picked %d pivots", len(witness))
    return SolveResult(
        gamma_ve=len(witness),
        witness=tuple(sorted(witness)),
        algorithm=Algorithm.baseline,
        trace=tuple(trace),
        states=len(decomposition.chains),
    )
