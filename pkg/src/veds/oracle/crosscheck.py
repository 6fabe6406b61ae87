"""
Agreement runs between the exact solver, the exhaustive oracle and the
chain baseline on seeded random instances.

Trials are independent. They may run in a process pool, and outcomes are
reported in trial order whatever order they finish in.
"""
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from django.conf import settings

from veds.graphs.exceptions import (
    CapacityError,
    GenerationError,
    InputError,
    VedsError,
)
from veds.graphs.formats import GraphDocument, dump_graph
from veds.graphs.graph import is_connected
from veds.graphs.ordering import compute_lex_convex_ordering, resolve_ordering
from veds.solver.baseline import solve_baseline
from veds.solver.exact import solve_exact

from .bruteforce import brute_force_gamma_ve
from .generators import GeneratorConfig, gen_random_convex_bipartite

logger = logging.getLogger(__name__)

MIN_DENSITY = 0.3
MAX_DENSITY = 0.9


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    label: str
    n1: int
    n2: int
    m: int
    exact: Optional[int] = None
    oracle: Optional[int] = None
    baseline: Optional[int] = None
    error: str = ""
    # the instance in graph text format, kept only when the trial failed
    instance: str = ""

    @property
    def agrees(self) -> bool:
        return not self.error and self.exact == self.oracle

    @property
    def baseline_gap(self) -> Optional[int]:
        if self.baseline is None or self.exact is None:
            return None
        return self.baseline - self.exact


@dataclass(frozen=True)
class CrossCheckReport:
    seed: int
    size_cap: int
    outcomes: Tuple[TrialOutcome, ...] = field(default=())

    @property
    def trials(self) -> int:
        return len(self.outcomes)

    @property
    def agreements(self) -> int:
        return sum(outcome.agrees for outcome in self.outcomes)

    @property
    def disagreements(self) -> List[TrialOutcome]:
        return [outcome for outcome in self.outcomes if not outcome.agrees]

    @property
    def baseline_gaps(self) -> Dict[int, int]:
        gaps = Counter(
            outcome.baseline_gap
            for outcome in self.outcomes
            if outcome.baseline_gap is not None
        )
        return dict(sorted(gaps.items()))

    @property
    def max_baseline_gap(self) -> int:
        return max(self.baseline_gaps, default=0)


@dataclass(frozen=True)
class _Trial:
    index: int
    label: str
    seed: int
    size_cap: int
    max_vertices: int
    max_retries: int
    document: Optional[GraphDocument] = None


def _random_config(trial: _Trial) -> GeneratorConfig:
    rng = trial_rng(trial.seed, trial.index)
    total = rng.randint(2, trial.size_cap)
    require_connected = trial.index % 2 == 0
    # connected trials keep n2 <= n1 so the intervals can chain across Y
    low = (total + 1) // 2 if require_connected else 1
    n1 = rng.randint(low, total - 1)
    return GeneratorConfig(
        n1=n1,
        n2=total - n1,
        density=round(rng.uniform(MIN_DENSITY, MAX_DENSITY), 3),
        seed=rng.getrandbits(64),
        require_connected=require_connected,
    )


def _run_trial(trial: _Trial) -> TrialOutcome:
    document = trial.document
    if document is None:
        cfg = _random_config(trial)
        try:
            document = gen_random_convex_bipartite(cfg, max_retries=trial.max_retries)
        except GenerationError as exc:
            return TrialOutcome(
                index=trial.index,
                label=trial.label,
                n1=cfg.n1,
                n2=cfg.n2,
                m=0,
                error=f"GenerationError: {exc}",
            )

    g = document.graph
    outcome = dict(index=trial.index, label=trial.label, n1=g.n1, n2=g.n2, m=g.m)
    try:
        ordering = compute_lex_convex_ordering(g, document.yorder)
        outcome["exact"] = solve_exact(g, ordering).gamma_ve
        oracle = brute_force_gamma_ve(g, max_vertices=trial.max_vertices)
        outcome["oracle"] = oracle.gamma_ve
        if g.m and is_connected(g):
            outcome["baseline"] = solve_baseline(g, ordering).gamma_ve
    except VedsError as exc:
        outcome["error"] = f"{exc.__class__.__name__}: {exc}"

    result = TrialOutcome(**outcome)
    if not result.agrees:
        result = TrialOutcome(
            **outcome,
            instance=dump_graph(g, document.yorder, comment=f"trial {trial.index}"),
        )
    return result


def cross_check(
    count: int,
    size_cap: int = 14,
    seed: int = 0,
    workers: Optional[int] = None,
    instances: Iterable[Tuple[str, GraphDocument]] = (),
) -> CrossCheckReport:
    """
    Run ``count`` random trials with ``n1 + n2 <= size_cap``, then one trial per
    named instance.
    """
    max_vertices = settings.VEDS_BRUTE_FORCE_MAX_VERTICES
    if count < 0:
        raise InputError(f"trial count must be non-negative, got {count}")
    if size_cap < 2:
        raise InputError(f"size cap must allow both sides a vertex, got {size_cap}")
    if size_cap > max_vertices:
        raise CapacityError(
            f"size cap {size_cap} exceeds the brute-force capacity of {max_vertices}"
        )
    if workers is None:
        workers = settings.VEDS_BENCH_WORKERS

    common = dict(
        seed=seed,
        size_cap=size_cap,
        max_vertices=max_vertices,
        max_retries=settings.VEDS_GENERATOR_MAX_RETRIES,
    )
    trials = [_Trial(index=index, label="random", **common) for index in range(count)]
    for label, document in instances:
        yorder = resolve_ordering(document.graph, document.yorder).yperm
        trials.append(
            _Trial(
                index=len(trials),
                label=label,
                document=GraphDocument(document.graph, yorder),
                **common,
            )
        )

    if workers > 1 and len(trials) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = tuple(executor.map(_run_trial, trials))
    else:
        outcomes = tuple(_run_trial(trial) for trial in trials)

    report = CrossCheckReport(seed=seed, size_cap=size_cap, outcomes=outcomes)
    for outcome in report.disagreements:
        logger.warning(
            "Trial %d (%s) disagrees: exact=%s oracle=%s %s",
            outcome.index,
            outcome.label,
            outcome.exact,
            outcome.oracle,
            outcome.error,
        )
    logger.info(
        "Cross-check seed=%d: %d/%d trials agree",
        seed,
        report.agreements,
        report.trials,
    )
    return report
