import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from django.conf import settings

from veds.graphs.exceptions import InputError
from veds.graphs.ordering import compute_lex_convex_ordering
from veds.solver.exact import solve_exact

from .crosscheck import trial_rng
from .generators import GeneratorConfig, gen_random_convex_bipartite

logger = logging.getLogger(__name__)
performance_logger = logging.getLogger("performance")

SCALING_DENSITY = 0.01


@dataclass(frozen=True)
class BenchRow:
    n1: int
    n2: int
    m: int
    density: float
    gamma_ve: int
    states: int
    elapsed_ms: float


@dataclass(frozen=True)
class BenchReport:
    rows: Tuple[BenchRow, ...]
    memoize: bool = True
    # log-log slope of time against size over the two largest sizes
    slope: Optional[float] = None

    @property
    def total_ms(self) -> float:
        return sum(row.elapsed_ms for row in self.rows)

    @property
    def mean_ms(self) -> float:
        return self.total_ms / len(self.rows) if self.rows else 0.0

    @property
    def max_ms(self) -> float:
        return max((row.elapsed_ms for row in self.rows), default=0.0)


def _time_instance(args) -> BenchRow:
    cfg, memoize = args
    document = gen_random_convex_bipartite(cfg, max_retries=1)
    g = document.graph

    started = time.perf_counter()
    ordering = compute_lex_convex_ordering(g, document.yorder)
    result = solve_exact(g, ordering, memoize=memoize)
    elapsed_ms = (time.perf_counter() - started) * 1000

    performance_logger.info(
        "bench n1=%d n2=%d m=%d memoize=%s states=%d elapsed_ms=%.3f",
        g.n1,
        g.n2,
        g.m,
        memoize,
        result.states,
        elapsed_ms,
    )
    return BenchRow(
        n1=g.n1,
        n2=g.n2,
        m=g.m,
        density=cfg.density,
        gamma_ve=result.gamma_ve,
        states=result.states,
        elapsed_ms=elapsed_ms,
    )


def _run(jobs, workers: Optional[int]):
    if workers is None:
        workers = settings.VEDS_BENCH_WORKERS
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return tuple(executor.map(_time_instance, jobs))
    return tuple(_time_instance(job) for job in jobs)


def bench_trials(
    trials: int,
    max_n: int,
    seed: int = 0,
    memoize: bool = True,
    workers: Optional[int] = None,
) -> BenchReport:
    if trials < 0 or max_n < 1:
        raise InputError(f"need trials >= 0 and max_n >= 1, got {trials} and {max_n}")

    jobs = []
    for index in range(trials):
        rng = trial_rng(seed, index)
        cfg = GeneratorConfig(
            n1=rng.randint(1, max_n),
            n2=rng.randint(1, max_n),
            density=round(rng.uniform(0.05, 0.6), 3),
            seed=rng.getrandbits(64),
        )
        jobs.append((cfg, memoize))
    return BenchReport(rows=_run(jobs, workers), memoize=memoize)


def loglog_slope(sizes: Sequence[int], times: Sequence[float]) -> Optional[float]:
    if len(sizes) < 2 or sizes[-1] == sizes[-2] or min(times[-2:]) <= 0:
        return None
    return math.log(times[-1] / times[-2]) / math.log(sizes[-1] / sizes[-2])


def bench_scaling(
    sizes: Optional[Sequence[int]] = None,
    density: float = SCALING_DENSITY,
    seed: int = 0,
    memoize: bool = True,
    workers: Optional[int] = None,
) -> BenchReport:
    """
    Time square instances ``n1 = n2 = n`` for each size, smallest first.
    """
    sizes = sorted(sizes or settings.VEDS_BENCH_SIZES)
    jobs = [
        (GeneratorConfig(n1=n, n2=n, density=density, seed=seed + n), memoize)
        for n in sizes
    ]
    rows = _run(jobs, workers)
    slope = loglog_slope(sizes, [row.elapsed_ms for row in rows])
    logger.info("Scaling run over sizes %s has log-log slope %s", sizes, slope)
    return BenchReport(rows=rows, memoize=memoize, slope=slope)
