import logging
import random
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from veds.graphs.exceptions import GenerationError, InputError
from veds.graphs.formats import GraphDocument
from veds.graphs.graph import build_graph, is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    n1: int
    n2: int
    density: float
    seed: int
    require_connected: bool = False

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise InputError(
                f"both sides need a vertex, got n1={self.n1}, n2={self.n2}"
            )
        if not 0 < self.density <= 1:
            raise InputError(f"density must lie in (0, 1], got {self.density}")


def _interval(rng: random.Random, n2: int, density: float):
    # geometric length with mean 1 + density * n2, truncated at n2
    success = 1 / (1 + density * n2)
    length = 1
    while length < n2 and rng.random() >= success:
        length += 1
    start = rng.randint(1, n2 - length + 1)
    return start, start + length - 1


def gen_random_convex_bipartite(
    cfg: GeneratorConfig, max_retries: Optional[int] = None
) -> GraphDocument:
    """
    One interval of Y per X vertex, so the identity yorder is convex.
    """
    if max_retries is None:
        max_retries = settings.VEDS_GENERATOR_MAX_RETRIES

    rng = random.Random(cfg.seed)
    for attempt in range(1, max_retries + 1):
        edges = []
        for i in range(1, cfg.n1 + 1):
            start, end = _interval(rng, cfg.n2, cfg.density)
            edges.extend((i, j) for j in range(start, end + 1))
        graph = build_graph(cfg.n1, cfg.n2, edges)

        if not cfg.require_connected or is_connected(graph):
            return GraphDocument(graph=graph, yorder=tuple(range(1, cfg.n2 + 1)))
        logger.debug("Attempt %d for %s gave a disconnected graph", attempt, cfg)

    raise GenerationError(
        f"no connected instance for n1={cfg.n1}, n2={cfg.n2}, density={cfg.density} "
        f"after {max_retries} attempts; try a higher density"
    )
