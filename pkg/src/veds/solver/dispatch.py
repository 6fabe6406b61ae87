import logging
import time
from dataclasses import replace
from typing import Optional, Sequence

from veds.graphs.constants import Algorithm
from veds.graphs.exceptions import InputError
from veds.graphs.graph import BipartiteGraph
from veds.graphs.ordering import resolve_ordering
from veds.oracle.bruteforce import brute_force_gamma_ve

from .baseline import solve_baseline
from .exact import solve_exact
from .results import SolveResult

logger = logging.getLogger(__name__)
performance_logger = logging.getLogger("performance")


def solve(
    g: BipartiteGraph,
    yorder: Optional[Sequence[int]] = None,
    algorithm: str = Algorithm.exact,
    memoize: bool = True,
) -> SolveResult:
    """
    Run one of the solvers on ``g`` and stamp the wall time on the result.

    The exhaustive search ignores ``yorder``, the other two need a convex
    ordering and fall back to the exhaustive ordering search without one.
    """
    if algorithm not in Algorithm.values:
        raise InputError(
            f"unknown algorithm '{algorithm}', "
            f"choose from {', '.join(Algorithm.values)}"
        )

    started = time.perf_counter()
    if algorithm == Algorithm.bruteforce:
        result = brute_force_gamma_ve(g)
    else:
        ordering = resolve_ordering(g, yorder)
        if algorithm == Algorithm.exact:
            result = solve_exact(g, ordering, memoize=memoize)
        else:
            result = solve_baseline(g, ordering)
    elapsed_ms = (time.perf_counter() - started) * 1000

    performance_logger.info(
        "solve algorithm=%s n1=%d n2=%d m=%d states=%d elapsed_ms=%.3f",
        algorithm,
        g.n1,
        g.n2,
        g.m,
        result.states,
        elapsed_ms,
    )
    return replace(result, elapsed_ms=elapsed_ms)
