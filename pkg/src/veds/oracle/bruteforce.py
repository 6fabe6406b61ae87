"""
Exhaustive ground truth for small instances.

Both searches enumerate candidates by increasing size with
``itertools.combinations``, so the first hit is a minimum and, among
minima, the lexicographically least member list.
"""
import itertools
import logging
from typing import Optional, Tuple

from django.conf import settings

from veds.graphs.constants import Algorithm
from veds.graphs.exceptions import CapacityError, ContractError
from veds.graphs.graph import BipartiteGraph, is_ve_dominating_set
from veds.reductions.setsystems import SetSystem
from veds.solver.results import SolveResult

logger = logging.getLogger(__name__)


def _dominated_edges(g: BipartiteGraph):
    """
    Bitmask of the edges each vertex dominates, in ``g.vertices()`` order.

    A vertex dominates every edge at itself or at a neighbour, and every edge
    at itself is also at one of its neighbours.
    """
    edge_bit = {edge: 1 << number for number, edge in enumerate(g.edges())}
    at_x = [0] * (g.n1 + 1)
    at_y = [0] * (g.n2 + 1)
    for (i, j), bit in edge_bit.items():
        at_x[i] |= bit
        at_y[j] |= bit

    masks = []
    for i in range(1, g.n1 + 1):
        mask = 0
        for j in g.neighbours_of_x(i):
            mask |= at_y[j]
        masks.append(mask)
    for j in range(1, g.n2 + 1):
        mask = 0
        for i in g.neighbours_of_y(j):
            mask |= at_x[i]
        masks.append(mask)
    return masks


def brute_force_gamma_ve(
    g: BipartiteGraph, max_vertices: Optional[int] = None
) -> SolveResult:
    if max_vertices is None:
        max_vertices = settings.VEDS_BRUTE_FORCE_MAX_VERTICES
    if g.n1 + g.n2 > max_vertices:
        logger.warning("Refusing brute force on %d vertices", g.n1 + g.n2)
        raise CapacityError(
            f"brute force is limited to n1 + n2 <= {max_vertices} (got {g.n1 + g.n2})"
        )

    vertices = g.vertices()
    masks = _dominated_edges(g)
    everything = (1 << g.m) - 1
    states = 0

    for size in range(len(vertices) + 1):
        for chosen in itertools.combinations(range(len(vertices)), size):
            states += 1
            covered = 0
            for number in chosen:
                covered |= masks[number]
            if covered == everything:
                witness = tuple(vertices[number] for number in chosen)
                if not is_ve_dominating_set(g, witness):
                    raise ContractError("edge bitmasks disagree with the verifier")
                return SolveResult(
                    gamma_ve=size,
                    witness=witness,
                    algorithm=Algorithm.bruteforce,
                    states=states,
                )

    raise ContractError("the whole vertex set failed to dominate every edge")


def brute_force_min_cover(
    ss: SetSystem, max_sets: Optional[int] = None
) -> Optional[Tuple[int, ...]]:
    """
    A smallest family of set indices covering ``1..p``, or ``None``.
    """
    if max_sets is None:
        max_sets = settings.VEDS_MIN_COVER_MAX_SETS
    if ss.q > max_sets:
        logger.warning("Refusing brute-force set cover on %d sets", ss.q)
        raise CapacityError(
            f"brute-force set cover is limited to q <= {max_sets} (got {ss.q})"
        )
    if ss.coverless:
        return None

    universe = (1 << ss.p) - 1
    masks = [sum(1 << (element - 1) for element in members) for members in ss.sets]
    for size in range(ss.q + 1):
        for chosen in itertools.combinations(range(ss.q), size):
            covered = 0
            for number in chosen:
                covered |= masks[number]
            if covered == universe:
                return tuple(number + 1 for number in chosen)
    return None
