import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from veds.graphs.exceptions import DomainError
from veds.graphs.graph import BipartiteGraph, VertexRef
from veds.oracle.bruteforce import brute_force_gamma_ve
from veds.solver.results import SolveResult

from .constructions import reduce_star_convex
from .conversions import vedset_to_cover
from .setsystems import SetSystem

logger = logging.getLogger(__name__)

VedSolver = Callable[[BipartiteGraph], SolveResult]

EXHAUSTIVE_PHASE = 1
REDUCTION_PHASE = 2


@dataclass(frozen=True)
class CoverResult:
    cover: Tuple[int, ...]
    phase: int
    # the VED-set the cover came from, empty when the exhaustive phase found it
    vedset: Tuple[VertexRef, ...] = ()


def approx_set_cover(
    ss: SetSystem, k: int, vedsolver: Optional[VedSolver] = None
) -> CoverResult:
    """
    Return a cover of size at most ``k`` when one exists, otherwise the cover
    read off a VED-set of the star-convex reduction.

    ``vedsolver`` defaults to the exhaustive oracle since star-convex graphs
    are generally not convex.
    """
    if ss.coverless:
        raise DomainError(
            f"elements {list(ss.uncovered)} lie in no set, there is no cover"
        )

    for size in range(1, min(k, ss.q) + 1):
        for cover in itertools.combinations(range(1, ss.q + 1), size):
            if ss.is_cover(cover):
                logger.debug("Exhaustive phase found a cover of size %d", size)
                return CoverResult(cover=cover, phase=EXHAUSTIVE_PHASE)

    if vedsolver is None:
        vedsolver = brute_force_gamma_ve

    artifact = reduce_star_convex(ss)
    result = vedsolver(artifact.graph)
    cover = vedset_to_cover(artifact, result.witness)
    logger.debug(
        "Reduction phase turned a VED-set of size %d into a cover of size %d",
        result.gamma_ve,
        len(cover),
    )
    return CoverResult(cover=cover, phase=REDUCTION_PHASE, vedset=result.witness)
