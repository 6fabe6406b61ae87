import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .exceptions import ContractError
from .graph import BipartiteGraph, VertexRef, connected_components
from .ordering import LexConvexOrdering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    # original indices, in xperm / yperm order
    xs: Tuple[int, ...]
    ys: Tuple[int, ...]
    # the rightmost neighbour of the leftmost Y vertex of the chain
    pivot: int


@dataclass(frozen=True)
class ChainDecomposition:
    ordering: LexConvexOrdering
    chains: Tuple[Chain, ...]
    # isolated_sets[i] is the J that follows chains[i], possibly empty
    isolated_sets: Tuple[Tuple[int, ...], ...]
    tail_isolated: Tuple[VertexRef, ...] = ()
    # Y vertices that lost every neighbour before their chain was formed
    stranded_y: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ClauseResult:
    chain: int
    clause: str
    passed: bool
    vacuous: bool = False
    detail: str = ""


@dataclass(frozen=True)
class LemmaReport:
    results: Tuple[ClauseResult, ...]
    stranded_y: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[ClauseResult]:
        return [result for result in self.results if not result.passed]


class _Peeler:
    """
    Works on X-positions and Y-positions of a lex-convex ordering.

    The Y vertices still present always form the suffix ``y_start..n2``.
    """

    def __init__(self, ordering: LexConvexOrdering):
        self.ordering = ordering
        self.n2 = len(ordering.yperm)
        self.left = (None,) + ordering.left_x
        self.right = (None,) + ordering.right_x

    def neighbours_of_first_y(self, remaining, y_start):
        return [p for p in remaining if self.left[p] <= y_start]

    def pivot(self, candidates):
        return max(candidates, key=lambda p: (self.right[p], p))

    def is_nested(self, remaining, y_start) -> bool:
        intervals = sorted(
            ((max(self.left[p], y_start), self.right[p]) for p in remaining),
            key=lambda interval: interval[0] - interval[1],
        )
        if intervals[0] != (y_start, self.n2):
            return False
        return all(
            outer[0] <= inner[0] and inner[1] <= outer[1]
            for outer, inner in zip(intervals, intervals[1:])
        )

    def chain(self, xs, y_from, y_to, pivot) -> Chain:
        return Chain(
            xs=tuple(self.ordering.x_at(p) for p in xs),
            ys=tuple(self.ordering.y_at(q) for q in range(y_from, y_to + 1)),
            pivot=self.ordering.x_at(pivot),
        )


def leading_chain(
    g: BipartiteGraph, ordering: LexConvexOrdering, assume_connected: bool = False
) -> Tuple[Chain, Tuple[int, ...]]:
    """
    The first step of the decomposition alone: H_1 and J_1.
    """
    decomposition = decompose(
        g, ordering, max_chains=1, assume_connected=assume_connected
    )
    if not decomposition.chains:
        raise ContractError("a graph without edges has no chain decomposition")
    return decomposition.chains[0], decomposition.isolated_sets[0]


def decompose(
    g: BipartiteGraph,
    ordering: LexConvexOrdering,
    max_chains: Optional[int] = None,
    assume_connected: bool = False,
) -> ChainDecomposition:
    if (len(ordering.xperm), len(ordering.yperm)) != (g.n1, g.n2):
        raise ContractError("ordering does not belong to this graph")
    if not assume_connected and len(connected_components(g)) > 1:
        raise ContractError(
            "chain decomposition needs a connected graph, split it into components first"
        )
    return peel_chains(ordering, max_chains=max_chains)


def peel_chains(
    ordering: LexConvexOrdering, max_chains: Optional[int] = None
) -> ChainDecomposition:
    """
    Chain decomposition read off a lex-convex ordering alone.

    The ordering must come from a connected graph; nothing is checked.
    """
    peeler = _Peeler(ordering)
    n1, n2 = len(ordering.xperm), peeler.n2
    remaining = [p for p in range(1, n1 + 1) if peeler.right[p] is not None]
    tail = [
        VertexRef.x(ordering.x_at(p))
        for p in range(1, n1 + 1)
        if peeler.right[p] is None
    ]
    chains = []
    isolated_sets = []
    stranded = []
    y_start = 1

    while remaining:
        if max_chains is not None and len(chains) >= max_chains:
            break

        if chains and peeler.is_nested(remaining, y_start):
            pivot = peeler.pivot(peeler.neighbours_of_first_y(remaining, y_start))
            chains.append(peeler.chain(remaining, y_start, n2, pivot))
            isolated_sets.append(())
            logger.debug("Remainder from Y-position %d is a chain graph", y_start)
            remaining = []
            y_start = n2 + 1
            break

        neighbours = peeler.neighbours_of_first_y(remaining, y_start)
        if not neighbours:
            stranded.append(ordering.y_at(y_start))
            y_start += 1
            continue

        pivot = peeler.pivot(neighbours)
        s = peeler.right[pivot]
        chains.append(peeler.chain(neighbours, y_start, s, pivot))

        taken = set(neighbours)
        rest = [p for p in remaining if p not in taken]
        isolated = [p for p in rest if peeler.right[p] <= s]
        isolated_sets.append(tuple(ordering.x_at(p) for p in isolated))
        remaining = [p for p in rest if peeler.right[p] > s]
        logger.debug(
            "Chain %d spans Y-positions %d..%d with %d isolated X vertices",
            len(chains),
            y_start,
            s,
            len(isolated),
        )
        y_start = s + 1

    if max_chains is None:
        tail.extend(VertexRef.x(ordering.x_at(p)) for p in remaining)
        tail.extend(VertexRef.y(ordering.y_at(q)) for q in range(y_start, n2 + 1))
        tail.extend(VertexRef.y(j) for j in stranded)

    if stranded:
        logger.warning("Decomposition stranded Y vertices %s", stranded)

    return ChainDecomposition(
        ordering=ordering,
        chains=tuple(chains),
        isolated_sets=tuple(isolated_sets),
        tail_isolated=tuple(sorted(tail)),
        stranded_y=tuple(stranded),
    )


def is_chain_graph(g: BipartiteGraph) -> bool:
    neighbourhoods = sorted(
        (set(g.neighbours_of_x(i)) for i in range(1, g.n1 + 1)), key=len
    )
    return all(
        smaller <= larger for smaller, larger in zip(neighbourhoods, neighbourhoods[1:])
    )


def _check_partition(g: BipartiteGraph, decomposition: ChainDecomposition):
    seen = []
    for chain in decomposition.chains:
        seen.extend(VertexRef.x(i) for i in chain.xs)
        seen.extend(VertexRef.y(j) for j in chain.ys)
    for isolated in decomposition.isolated_sets:
        seen.extend(VertexRef.x(i) for i in isolated)
    seen.extend(decomposition.tail_isolated)

    if len(seen) != len(set(seen)) or set(seen) != set(g.vertices()):
        raise ContractError(
            "decomposition does not partition the vertices of this graph"
        )


def verify_decomposition_lemma(
    g: BipartiteGraph, decomposition: ChainDecomposition
) -> LemmaReport:
    _check_partition(g, decomposition)

    ordering = decomposition.ordering
    x_position = ordering.x_position
    y_position = ordering.y_position
    chains = decomposition.chains
    isolated_sets = decomposition.isolated_sets
    results = []

    for number, chain in enumerate(chains, start=1):
        index = number - 1
        chain_ys = set(chain.ys)

        # (a) every vertex of J_i sees Y_{H_i}
        isolated = isolated_sets[index]
        lonely = [x for x in isolated if not chain_ys & set(g.neighbours_of_x(x))]
        results.append(
            ClauseResult(
                chain=number,
                clause="a",
                passed=not lonely,
                vacuous=not isolated,
                detail=", ".join(f"x{x}" for x in lonely),
            )
        )

        # (b) the leftmost X of H_{i+1} sees the rightmost Y of H_i
        if index + 1 < len(chains):
            leftmost = min(chains[index + 1].xs, key=x_position.__getitem__)
            rightmost = max(chain.ys, key=y_position.__getitem__)
            adjacent = g.has_edge(leftmost, rightmost)
            results.append(
                ClauseResult(
                    chain=number,
                    clause="b",
                    passed=adjacent,
                    detail="" if adjacent else f"x{leftmost} !~ y{rightmost}",
                )
            )
        else:
            results.append(
                ClauseResult(chain=number, clause="b", passed=True, vacuous=True)
            )

        # (c) H_i has no neighbour in J_{i+1} or H_{i+2}
        far_xs = set(isolated_sets[index + 1]) if index + 1 < len(chains) else set()
        far_ys = set()
        if index + 2 < len(chains):
            far_xs.update(chains[index + 2].xs)
            far_ys.update(chains[index + 2].ys)
        touching = [
            f"x{x}~y{y}"
            for x in sorted(far_xs)
            for y in g.neighbours_of_x(x)
            if y in chain_ys
        ] + [
            f"x{x}~y{y}"
            for x in chain.xs
            for y in g.neighbours_of_x(x)
            if y in far_ys
        ]
        results.append(
            ClauseResult(
                chain=number,
                clause="c",
                passed=not touching,
                vacuous=not (far_xs or far_ys),
                detail=", ".join(touching),
            )
        )

    return LemmaReport(results=tuple(results), stranded_y=decomposition.stranded_y)
